#pragma once

// Commands over loaded documents.  Each command produces a machine-readable
// report; the human text is rendered from that report.

#include <optional>
#include <string>
#include <vector>

#include "hodge1/document.hpp"

namespace hodge1 {

struct RunOptions {
    std::optional<int> p;
    std::optional<int> n;
    std::optional<int> i;
    MembershipMode mode = MembershipMode::isogeny;
};

/// validate, hodge-numbers, motive, glue, square-check, realize.
std::vector<std::string> command_names();

/// Throws UnsupportedInput when the command does not apply to the document kind
/// or a required flag is missing.
Json run_command(const std::string& command, const Document& doc, const RunOptions& opts);

std::string render_text(const Json& report);

/// The realized structure of a one-motive as an mhs document.
Document realized_document(const Document& one_motive, int p);

}  // namespace hodge1
