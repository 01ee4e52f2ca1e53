#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "opalg/equivariant.hpp"

namespace opalg {

using Json = nlohmann::json;

/// An algebra with an optional group action, as read from or written to a
/// presentation document.
struct PresentationFile {
  AlgebraPresentation algebra;
  std::optional<GroupAction> action;
};

/// Parses a presentation document. Malformed input raises ValidationError
/// naming the JSON position or the offending path.
PresentationFile parse_presentation(const std::string& text);
PresentationFile presentation_from_json(const Json& doc);

/// Canonical document: reduced scalar strings, sorted keys.
Json presentation_to_json(const PresentationFile& p);
Json presentation_to_json(const AlgebraPresentation& a);

/// Basis vectors of a subspace: {"basis": [[...], ...]} or a bare list.
Subspace parse_subspace(const std::string& text, const Field& f, std::size_t ambient);

Json field_to_json(const Field& f);
Json scalar_to_json(const Scalar& s);
Json vector_to_json(std::span<const Scalar> v);
Json matrix_to_json(const Matrix& m);
Json subspace_to_json(const Subspace& s);

/// Two-space indented dump with a trailing newline.
std::string dump_canonical(const Json& j);

}  // namespace opalg
