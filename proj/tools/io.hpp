#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "quadpow/dependence.hpp"
#include "quadpow/forms.hpp"

namespace quadpow::io {

using Json = nlohmann::ordered_json;

/// Bad input; the message already carries "source:line:column:" when known.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Location {
  std::size_t line = 1, column = 1;
};

/// Start positions of every value in a JSON text, keyed by JSON pointer.
class PositionIndex {
 public:
  PositionIndex() = default;
  explicit PositionIndex(std::string_view text);
  std::optional<Location> find(const std::string& pointer) const;

 private:
  std::map<std::string, Location> at_;
};

Location location_of(std::string_view text, std::size_t offset);

/// A parsed input document. Parse failures throw InputError with line/column.
struct Source {
  std::string name;
  std::string text;
  Json doc;
  PositionIndex index;

  static Source from_text(std::string name, std::string text);
  static Source from_file(const std::string& path);  // "-" reads stdin

  [[noreturn]] void fail(const std::string& pointer, const std::string& message, std::size_t offset = 0,
                         bool inside_string = false) const;
  const Json& at(const std::string& pointer) const;
};

Json to_json(const Scalar& s);
Json to_json(const BinaryForm& f);
Json to_json(const LinearChange& m);
Json to_json(const PowerIdentity& id);
Json to_json(const QPoly& p);

Scalar scalar_from(const Source& src, const std::string& pointer);
BinaryForm form_from(const Source& src, const std::string& pointer);
LinearChange change_from(const Source& src, const std::string& pointer);
PowerIdentity identity_from(const Source& src, const std::string& pointer);
long integer_from(const Source& src, const std::string& pointer);

/// Structural equality, including sides.
bool same_identity(const PowerIdentity& a, const PowerIdentity& b);

std::string fnv1a_hex(std::string_view data);

}  // namespace quadpow::io
