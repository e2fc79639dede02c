#include "io.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "quadpow/errors.hpp"
#include "quadpow/expr.hpp"

namespace quadpow::io {
namespace {

class Scanner {
 public:
  Scanner(std::string_view text, std::map<std::string, Location>& out) : s_(text), out_(out) {}

  void run() {
    skip_ws();
    if (i_ < s_.size()) value("");
  }

 private:
  void skip_ws() {
    while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t' || s_[i_] == '\n' || s_[i_] == '\r')) ++i_;
  }

  std::string string_token() {
    std::string out;
    ++i_;
    while (i_ < s_.size() && s_[i_] != '"') {
      if (s_[i_] == '\\' && i_ + 1 < s_.size()) {
        ++i_;
        out += s_[i_] == 'n' ? '\n' : s_[i_] == 't' ? '\t' : s_[i_];
      } else {
        out += s_[i_];
      }
      ++i_;
    }
    ++i_;
    return out;
  }

  static std::string escape(const std::string& key) {
    std::string out;
    for (char c : key) {
      if (c == '~')
        out += "~0";
      else if (c == '/')
        out += "~1";
      else
        out += c;
    }
    return out;
  }

  void value(const std::string& ptr) {
    out_.emplace(ptr, location_of(s_, i_));
    if (i_ >= s_.size()) return;
    const char c = s_[i_];
    if (c == '{') {
      ++i_;
      skip_ws();
      while (i_ < s_.size() && s_[i_] != '}') {
        const std::string key = string_token();
        skip_ws();
        ++i_;  // ':'
        skip_ws();
        value(ptr + "/" + escape(key));
        skip_ws();
        if (i_ < s_.size() && s_[i_] == ',') ++i_;
        skip_ws();
      }
      ++i_;
    } else if (c == '[') {
      ++i_;
      skip_ws();
      for (std::size_t k = 0; i_ < s_.size() && s_[i_] != ']'; ++k) {
        value(ptr + "/" + std::to_string(k));
        skip_ws();
        if (i_ < s_.size() && s_[i_] == ',') ++i_;
        skip_ws();
      }
      ++i_;
    } else if (c == '"') {
      string_token();
    } else {
      while (i_ < s_.size() && s_[i_] != ',' && s_[i_] != '}' && s_[i_] != ']' && s_[i_] != ' ' && s_[i_] != '\n' &&
             s_[i_] != '\r' && s_[i_] != '\t')
        ++i_;
    }
  }

  std::string_view s_;
  std::map<std::string, Location>& out_;
  std::size_t i_ = 0;
};

std::string where(const std::string& name, const std::optional<Location>& loc) {
  if (!loc) return name + ": ";
  return name + ":" + std::to_string(loc->line) + ":" + std::to_string(loc->column) + ": ";
}

std::string json_type(const Json& j) { return j.type_name(); }

}  // namespace

PositionIndex::PositionIndex(std::string_view text) { Scanner(text, at_).run(); }

std::optional<Location> PositionIndex::find(const std::string& pointer) const {
  auto it = at_.find(pointer);
  if (it == at_.end()) return std::nullopt;
  return it->second;
}

Location location_of(std::string_view text, std::size_t offset) {
  Location loc;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++loc.line;
      loc.column = 1;
    } else {
      ++loc.column;
    }
  }
  return loc;
}

Source Source::from_text(std::string name, std::string text) {
  Source src;
  src.name = std::move(name);
  src.text = std::move(text);
  try {
    src.doc = Json::parse(src.text);
  } catch (const Json::parse_error& e) {
    const std::size_t off = e.byte > 0 ? e.byte - 1 : 0;
    std::string msg = e.what();
    const auto cut = msg.find("syntax error");
    if (cut != std::string::npos) msg = msg.substr(cut);
    throw InputError(where(src.name, location_of(src.text, off)) + msg);
  }
  src.index = PositionIndex(src.text);
  return src;
}

Source Source::from_file(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open file");
    buf << in.rdbuf();
  }
  return from_text(path == "-" ? "<stdin>" : path, buf.str());
}

void Source::fail(const std::string& pointer, const std::string& message, std::size_t offset,
                  bool inside_string) const {
  std::optional<Location> loc = index.find(pointer);
  if (loc && inside_string) loc->column += 1 + offset;
  throw InputError(where(name, loc) + (pointer.empty() ? "" : pointer + ": ") + message);
}

const Json& Source::at(const std::string& pointer) const {
  const Json::json_pointer p(pointer);
  if (!doc.contains(p)) {
    const auto slash = pointer.rfind('/');
    fail(pointer.substr(0, slash), "missing \"" + pointer.substr(slash + 1) + "\"");
  }
  return doc.at(p);
}

Json to_json(const Scalar& s) { return s.to_string(); }

Json to_json(const BinaryForm& f) {
  Json c = Json::array();
  for (const auto& x : f.coeffs()) c.push_back(to_json(x));
  return Json{{"degree", f.degree()}, {"coeffs", c}};
}

Json to_json(const LinearChange& m) { return Json{{"m", {to_json(m.a), to_json(m.b), to_json(m.c), to_json(m.d)}}}; }

Json to_json(const PowerIdentity& id) {
  Json terms = Json::array();
  for (const auto& t : id.terms) {
    Json j{{"lambda", to_json(t.lambda)}, {"form", to_json(t.form)}};
    if (t.side == Side::Right) j["side"] = "right";
    terms.push_back(j);
  }
  return Json{{"d", id.d}, {"terms", terms}};
}

Json to_json(const QPoly& p) {
  Json c = Json::array();
  for (const auto& x : p.coeffs()) c.push_back(to_string(x));
  return c;
}

Scalar scalar_from(const Source& src, const std::string& pointer) {
  const Json& j = src.at(pointer);
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) src.fail(pointer, "expected a scalar expression string, found " + json_type(j));
  const std::string text = j.get<std::string>();
  try {
    return parse_scalar(text);
  } catch (const ParseError& e) {
    std::string msg = e.what();
    const auto colon = msg.find(": ");
    if (colon != std::string::npos) msg = msg.substr(colon + 2);
    src.fail(pointer, msg + " in \"" + text + "\"", e.position(), true);
  } catch (const Error& e) {
    src.fail(pointer, std::string(e.what()) + " in \"" + text + "\"");
  }
}

long integer_from(const Source& src, const std::string& pointer) {
  const Json& j = src.at(pointer);
  if (!j.is_number_integer()) src.fail(pointer, "expected an integer, found " + json_type(j));
  return j.get<long>();
}

BinaryForm form_from(const Source& src, const std::string& pointer) {
  const Json& j = src.at(pointer);
  if (!j.is_object()) src.fail(pointer, "expected a form object, found " + json_type(j));
  const Json& c = src.at(pointer + "/coeffs");
  if (!c.is_array() || c.empty()) src.fail(pointer + "/coeffs", "expected a non-empty array of coefficients");
  std::vector<Scalar> coeffs;
  for (std::size_t i = 0; i < c.size(); ++i) coeffs.push_back(scalar_from(src, pointer + "/coeffs/" + std::to_string(i)));
  if (j.contains("degree")) {
    const long k = integer_from(src, pointer + "/degree");
    if (k + 1 != static_cast<long>(coeffs.size()))
      src.fail(pointer + "/degree", "degree " + std::to_string(k) + " needs " + std::to_string(k + 1) +
                                        " coefficients, found " + std::to_string(coeffs.size()));
  }
  return BinaryForm(std::move(coeffs));
}

LinearChange change_from(const Source& src, const std::string& pointer) {
  const Json& m = src.at(pointer + "/m");
  if (!m.is_array() || m.size() != 4) src.fail(pointer + "/m", "expected four entries [a, b, c, d]");
  return {scalar_from(src, pointer + "/m/0"), scalar_from(src, pointer + "/m/1"), scalar_from(src, pointer + "/m/2"),
          scalar_from(src, pointer + "/m/3")};
}

PowerIdentity identity_from(const Source& src, const std::string& pointer) {
  const Json& j = src.at(pointer);
  if (!j.is_object()) src.fail(pointer, "expected an identity object, found " + json_type(j));
  PowerIdentity id;
  id.d = integer_from(src, pointer + "/d");
  if (id.d < 1) src.fail(pointer + "/d", "exponent must be positive");
  const Json& terms = src.at(pointer + "/terms");
  if (!terms.is_array() || terms.empty()) src.fail(pointer + "/terms", "expected a non-empty array of terms");
  int degree = -1;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string tp = pointer + "/terms/" + std::to_string(k);
    PowerTerm t{scalar_from(src, tp + "/lambda"), form_from(src, tp + "/form"), Side::Left};
    if (degree >= 0 && t.form.degree() != degree) src.fail(tp + "/form", "all forms must have the same degree");
    degree = t.form.degree();
    if (terms[k].contains("side")) {
      const Json& s = terms[k]["side"];
      if (s == "right")
        t.side = Side::Right;
      else if (s != "left")
        src.fail(tp + "/side", "side must be \"left\" or \"right\"");
    }
    id.terms.push_back(std::move(t));
  }
  return id;
}

bool same_identity(const PowerIdentity& a, const PowerIdentity& b) {
  if (a.d != b.d || a.terms.size() != b.terms.size()) return false;
  for (std::size_t k = 0; k < a.terms.size(); ++k) {
    const auto &s = a.terms[k], &t = b.terms[k];
    if (s.side != t.side || !(s.lambda == t.lambda) || s.form.degree() != t.form.degree()) return false;
    for (int i = 0; i <= s.form.degree(); ++i)
      if (!(s.form.coeff(i) == t.form.coeff(i))) return false;
  }
  return true;
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace quadpow::io
