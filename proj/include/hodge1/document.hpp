#pragma once

// On-disk documents: a JSON object with a schema version, the scalar field,
// and one payload.  Rationals are strings "a/b" (plain JSON integers are
// accepted), extended scalars are 4-tuples over {1, i, sqrt d, i sqrt d}.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hodge1/descent.hpp"

namespace hodge1 {

inline constexpr int kSchemaVersion = 1;

/// Syntax or schema error.  `field` is a path such as payload.degrees[1].z;
/// `line` is 0 when the error is not tied to a source position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::string field, std::size_t line = 0);
    const std::string& field() const { return field_; }
    std::size_t line() const { return line_; }

private:
    std::string field_;
    std::size_t line_;
};

enum class DocumentKind { mhs, complex, simplicial_datum, gluing, one_motive };

std::string kind_name(DocumentKind k);

using Payload = std::variant<MixedHodgeStructure, MHSComplex, SimplicialCohomologyDatum, GluingSpec, OneMotive>;

struct Document {
    int schema = kSchemaVersion;
    std::int64_t field = 1;  // square-free radicand d
    Payload payload;
    std::vector<std::string> notes;

    DocumentKind kind() const { return static_cast<DocumentKind>(payload.index()); }
    friend bool operator==(const Document&, const Document&) = default;
};

/// Radicand used by the payload's scalars (1 when none carries a radical);
/// throws InvalidInput when two radicands are mixed.
std::int64_t payload_radicand(const Payload& p);

/// Document with the field taken from the payload.
Document make_document(Payload p, std::vector<std::string> notes = {});

/// Runs the payload's validator; throws InvalidInput with the module's report.
void validate_document(const Document& d);

/// Parses and validates.  `source` names the input in messages.
Document parse_document(const std::string& text, const std::string& source = "<input>");
Document load_document(const std::string& path);

/// Pretty-printed, deterministic, newline-terminated.
std::string serialize(const Document& d);

using Json = nlohmann::ordered_json;

/// The on-disk encodings, reused by reports.
Json scalar_json(const Scalar& s);
Json point_json(const std::vector<Scalar>& v);
Json int_matrix_json(const IntMatrix& m);
Json mhs_json(const MixedHodgeStructure& h);

/// Indented JSON with short primitive arrays (matrix rows, points) kept on one line.
std::string dump_pretty(const Json& j);

}  // namespace hodge1
