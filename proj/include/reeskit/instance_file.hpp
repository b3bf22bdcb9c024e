#ifndef REESKIT_INSTANCE_FILE_HPP
#define REESKIT_INSTANCE_FILE_HPP

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "reeskit/verifier.hpp"

namespace reeskit {

/// Instance-file syntax error; line and column are 1-based.
class InstanceFileError : public Error {
 public:
  InstanceFileError(const std::string& source, std::size_t line, std::size_t column, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

struct InstanceFile {
  Target target;
  std::optional<std::size_t> pair_cap;
  std::optional<std::uint32_t> deg_cap;
  std::uint64_t seed = 1;
  std::vector<int> deltas;
  std::vector<CheckKind> checks;
  std::optional<int> submatrices;
  std::optional<int> witness_bound;

  bool is_powers() const { return std::holds_alternative<Instance>(target); }

  CheckParams params() const {
    CheckParams p;
    p.seed = seed;
    p.deltas = deltas;
    p.witness_bound = witness_bound;
    if (submatrices) p.random_submatrices = *submatrices;
    if (pair_cap) p.gb.max_pairs = *pair_cap;
    if (deg_cap) p.gb.max_degree = *deg_cap;
    return p;
  }

  /// Canonical text; parse(to_text()) reproduces the same file.
  std::string to_text() const {
    std::ostringstream os;
    auto join = [](const auto& xs, auto fn) {
      std::string s;
      for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + fn(xs[i]);
      return s;
    };
    auto num = [](int v) { return std::to_string(v); };
    if (const auto* inst = std::get_if<Instance>(&target)) {
      os << "mode = powers\n";
      os << "field = " << inst->field.to_string() << "\n";
      os << "n = " << inst->n << "\n";
      std::vector<int> a(inst->stripped_zeros, 0);
      a.insert(a.end(), inst->a.begin(), inst->a.end());
      os << "a = " << join(a, num) << "\n";
    } else {
      const auto& ti = std::get<TruncationInstance>(target);
      os << "mode = truncation\n";
      os << "field = " << ti.field.to_string() << "\n";
      os << "n = " << ti.n << "\n";
      os << "f = " << join(ti.f, [](const std::string& s) { return s; }) << "\n";
      os << "d = " << ti.d << "\n";
    }
    os << "seed = " << seed << "\n";
    if (pair_cap) os << "pair-cap = " << *pair_cap << "\n";
    if (deg_cap) os << "deg-cap = " << *deg_cap << "\n";
    if (!deltas.empty()) os << "delta = " << join(deltas, num) << "\n";
    if (!checks.empty()) os << "checks = " << join(checks, [](CheckKind k) { return to_string(k); }) << "\n";
    if (submatrices) os << "submatrices = " << *submatrices << "\n";
    if (witness_bound) os << "witness-bound = " << *witness_bound << "\n";
    return os.str();
  }
};

namespace detail {

struct Entry {
  std::string value;
  std::size_t line = 0, key_col = 0, value_col = 0;
};

inline std::string trim(const std::string& s, std::size_t* lead = nullptr) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    if (lead) *lead = s.size();
    return "";
  }
  auto e = s.find_last_not_of(" \t\r");
  if (lead) *lead = b;
  return s.substr(b, e - b + 1);
}

class InstanceParser {
 public:
  explicit InstanceParser(std::string source) : source_(std::move(source)) {}

  InstanceFile parse(const std::string& text) {
    read_entries(text);
    InstanceFile out;
    std::string mode = entries_.count("mode") ? entries_["mode"].value : "powers";
    if (mode != "powers" && mode != "truncation") fail("mode", "mode must be 'powers' or 'truncation'");
    FieldSpec field;
    if (entries_.count("field")) {
      try {
        field = FieldSpec::parse(entries_["field"].value);
      } catch (const Error& e) {
        fail("field", e.what());
      }
    }
    int n = static_cast<int>(integer("n", true).value());
    if (n < 2) fail("n", "n must be at least 2");
    if (mode == "powers") {
      for (const char* k : {"f", "d"}) forbid(k, "powers");
      auto a = int_list("a", true);
      try {
        out.target = Instance::powers(n, a, field);
      } catch (const Error& e) {
        fail("a", e.what());
      }
    } else {
      forbid("a", "truncation");
      auto f = split("f", true);
      if (f.empty()) fail("f", "the f-list is empty");
      int d = static_cast<int>(integer("d", true).value());
      TruncationInstance ti{n, f, d, field};
      try {
        if (field.kind == FieldKind::Rationals) {
          TruncationModel<Rationals>::make(Rationals{}, ti);
        } else {
          TruncationModel<PrimeField>::make(PrimeField(field.characteristic), ti);
        }
      } catch (const Error& e) {
        std::string msg = e.what();
        fail(msg.find("d must") != std::string::npos ? "d" : "f", msg);
      }
      out.target = ti;
    }
    if (auto v = integer("seed")) {
      if (*v < 0) fail("seed", "seed must be non-negative");
      out.seed = static_cast<std::uint64_t>(*v);
    }
    if (auto v = integer("pair-cap")) out.pair_cap = static_cast<std::size_t>(positive("pair-cap", *v));
    if (auto v = integer("deg-cap")) out.deg_cap = static_cast<std::uint32_t>(positive("deg-cap", *v));
    if (auto v = integer("submatrices")) {
      if (*v < 0) fail("submatrices", "submatrices must be non-negative");
      out.submatrices = static_cast<int>(*v);
    }
    if (auto v = integer("witness-bound")) {
      if (*v < 0) fail("witness-bound", "witness-bound must be non-negative");
      out.witness_bound = static_cast<int>(*v);
    }
    if (entries_.count("delta")) {
      for (int v : int_list("delta", true)) out.deltas.push_back(static_cast<int>(positive("delta", v)));
    }
    if (entries_.count("checks")) {
      for (const auto& name : split("checks", true)) {
        try {
          out.checks.push_back(parse_check(name));
        } catch (const Error& e) {
          fail("checks", e.what());
        }
      }
    }
    return out;
  }

 private:
  static const std::vector<std::string>& known_keys() {
    static const std::vector<std::string> keys{"mode", "field", "n", "a", "f", "d", "seed", "pair-cap", "deg-cap", "delta", "checks", "submatrices", "witness-bound"};
    return keys;
  }

  [[noreturn]] void fail_at(std::size_t line, std::size_t col, const std::string& what) const { throw InstanceFileError(source_, line, col, what); }
  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    const auto& e = entries_.at(key);
    fail_at(e.line, e.value_col, key + ": " + what);
  }

  void read_entries(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
      ++lineno;
      auto hash = raw.find('#');
      std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
      std::size_t lead = 0;
      if (trim(line, &lead).empty()) continue;
      auto eq = line.find('=');
      if (eq == std::string::npos) fail_at(lineno, lead + 1, "expected 'key = value'");
      std::size_t key_lead = 0, value_lead = 0;
      auto key = trim(line.substr(0, eq), &key_lead);
      auto value = trim(line.substr(eq + 1), &value_lead);
      if (key.empty()) fail_at(lineno, eq + 1, "missing key before '='");
      if (std::find(known_keys().begin(), known_keys().end(), key) == known_keys().end()) fail_at(lineno, key_lead + 1, "unknown key '" + key + "'");
      if (entries_.count(key)) fail_at(lineno, key_lead + 1, "duplicate key '" + key + "' (first set on line " + std::to_string(entries_[key].line) + ")");
      if (value.empty()) fail_at(lineno, eq + 2, "missing value for '" + key + "'");
      entries_[key] = Entry{value, lineno, key_lead + 1, eq + 2 + value_lead};
    }
    last_line_ = lineno;
  }

  void require(const std::string& key) const {
    if (!entries_.count(key)) fail_at(last_line_ + 1, 1, "missing required key '" + key + "'");
  }

  void forbid(const std::string& key, const std::string& mode) const {
    if (entries_.count(key)) {
      const auto& e = entries_.at(key);
      fail_at(e.line, e.key_col, "key '" + key + "' is not used in " + mode + " mode");
    }
  }

  long positive(const std::string& key, long v) const {
    if (v <= 0) fail(key, "must be positive");
    return v;
  }

  static std::optional<long> to_long(const std::string& s) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
  }

  std::optional<long> integer(const std::string& key, bool required = false) const {
    if (!entries_.count(key)) {
      if (required) require(key);
      return std::nullopt;
    }
    auto v = to_long(entries_.at(key).value);
    if (!v) fail(key, "expected an integer, got '" + entries_.at(key).value + "'");
    return v;
  }

  // Comma-separated items; surrounding parentheses are optional.
  std::vector<std::string> split(const std::string& key, bool required) const {
    if (!entries_.count(key)) {
      if (required) require(key);
      return {};
    }
    const auto& e = entries_.at(key);
    std::string v = e.value;
    std::size_t offset = e.value_col;
    if (v.front() == '(') {
      if (v.back() != ')') fail_at(e.line, e.value_col, key + ": unbalanced '('");
      v = v.substr(1, v.size() - 2);
      ++offset;
    }
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
      auto comma = v.find(',', start);
      auto piece = v.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      auto item = trim(piece);
      if (item.empty()) fail_at(e.line, offset + start, key + ": empty list item");
      out.push_back(item);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return out;
  }

  std::vector<int> int_list(const std::string& key, bool required) const {
    std::vector<int> out;
    for (const auto& item : split(key, required)) {
      auto v = to_long(item);
      if (!v) fail(key, "expected an integer list, got item '" + item + "'");
      out.push_back(static_cast<int>(*v));
    }
    return out;
  }

  std::string source_;
  std::map<std::string, Entry> entries_;
  std::size_t last_line_ = 0;
};

}  // namespace detail

inline InstanceFile parse_instance_file(const std::string& text, const std::string& source = "<input>") {
  return detail::InstanceParser(source).parse(text);
}

inline InstanceFile load_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_file(buf.str(), path);
}

/// Replaces the field of the target.
inline void set_field(Target& target, const FieldSpec& field) {
  std::visit([&](auto& t) { t.field = field; }, target);
}

}  // namespace reeskit

#endif  // REESKIT_INSTANCE_FILE_HPP
