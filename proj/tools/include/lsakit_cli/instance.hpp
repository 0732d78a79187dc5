#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "lsakit/algebroid.hpp"
#include "lsakit/cohomology.hpp"
#include "lsakit/error.hpp"
#include "lsakit/matrix.hpp"
#include "lsakit/representation.hpp"

namespace lsakit::cli {

/// A polynomial syntax error located inside an instance file.
class InstanceSyntaxError : public SyntaxError {
 public:
  InstanceSyntaxError(const SyntaxError& inner, std::string path, std::string text)
      : SyntaxError(inner.position(), inner.expected()),
        path_(std::move(path)),
        text_(std::move(text)) {}

  /// JSON pointer of the offending string.
  const std::string& path() const noexcept { return path_; }
  const std::string& text() const noexcept { return text_; }

 private:
  std::string path_;
  std::string text_;
};

/// A point algebra acting on a chart through vector fields.
struct ActionBlock {
  std::vector<std::string> coordinates;
  std::vector<VectorField> fields;
};

struct Instance {
  std::string name;
  std::string description;
  LSAlgebroid algebroid;
  /// Explicit (E; rho, mu); "left" in the file selects (A; L, 0).
  std::optional<Representation> representation;
  std::optional<PolyMatrix> bilinear_form;
  std::map<std::string, PolyMatrix> endomorphisms;
  std::optional<std::vector<Section>> kernel_frame;
  std::map<std::string, MultiDerivation> deformations;
  std::optional<ActionBlock> action;
  /// FNV-1a 64 of the canonical serialization of the input document.
  std::string digest;
};

/// Throws SchemaError (message starts with the JSON pointer), InstanceSyntaxError,
/// Error(UnknownVariable).
Instance parse_instance(const nlohmann::json& doc);
/// Throws IoError in addition.
Instance load_instance(const std::filesystem::path& path);

std::string fnv1a64_hex(const std::string& bytes);

/// Serialization in the instance format, so derived structures can be fed back.
nlohmann::json algebroid_to_json(const FrameAlgebroid& a, const char* table_key);
nlohmann::json matrix_to_json(const PolyMatrix& m, const std::vector<std::string>& coords);

}  // namespace lsakit::cli
