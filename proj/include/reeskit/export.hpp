#ifndef REESKIT_EXPORT_HPP
#define REESKIT_EXPORT_HPP

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "reeskit/instance_file.hpp"

namespace reeskit {

enum class Dialect { Plain, M2, Singular };

inline Dialect parse_dialect(const std::string& s) {
  if (s == "plain") return Dialect::Plain;
  if (s == "m2") return Dialect::M2;
  if (s == "singular") return Dialect::Singular;
  throw Error("unsupported dialect '" + s + "' (expected plain, m2 or singular)");
}

inline std::string to_string(Dialect d) {
  switch (d) {
    case Dialect::Plain:
      return "plain";
    case Dialect::M2:
      return "m2";
    case Dialect::Singular:
      return "singular";
  }
  return "?";
}

namespace detail {

// T_1_2_0 -> {"T", {"1","2","0"}}, x3 -> {"x", {"3"}}, t -> {"t", {}}
inline std::pair<std::string, std::vector<std::string>> split_name(const std::string& name) {
  if (name.size() > 2 && name[0] == 'T' && name[1] == '_') {
    std::vector<std::string> parts;
    std::size_t start = 2;
    while (true) {
      auto u = name.find('_', start);
      parts.push_back(name.substr(start, u - start));
      if (u == std::string::npos) break;
      start = u + 1;
    }
    return {"T", parts};
  }
  std::size_t k = name.size();
  while (k > 0 && std::isdigit(static_cast<unsigned char>(name[k - 1]))) --k;
  if (k == 0 || k == name.size()) return {name, {}};
  return {name.substr(0, k), {name.substr(k)}};
}

inline std::string m2_name(const std::string& name) {
  auto [stem, idx] = split_name(name);
  if (idx.empty()) return stem;
  if (idx.size() == 1) return stem + "_" + idx[0];
  std::string s = stem + "_(";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + idx[i];
  return s + ")";
}

inline std::string singular_name(const std::string& name) {
  auto [stem, idx] = split_name(name);
  for (const auto& i : idx) stem += "(" + i + ")";
  return stem;
}

template <class F>
std::string render(const Polynomial<F>& p, const std::function<std::string(const std::string&)>& rename) {
  if (p.is_zero()) return "0";
  const F& k = p.ring()->field();
  std::string out;
  for (std::size_t i = 0; i < p.terms().size(); ++i) {
    const auto& t = p.terms()[i];
    bool negative = k.is_negative(t.coeff);
    auto mag = negative ? k.neg(t.coeff) : t.coeff;
    out += i == 0 ? (negative ? "-" : "") : (negative ? " - " : " + ");
    std::string mono;
    for (std::size_t v = 0; v < t.mono.size(); ++v) {
      if (!t.mono[v]) continue;
      if (!mono.empty()) mono += "*";
      mono += rename(p.ring()->name(v));
      if (t.mono[v] > 1) mono += "^" + std::to_string(t.mono[v]);
    }
    if (mono.empty()) {
      out += k.to_string(mag);
    } else {
      out += (k.is_one(mag) ? "" : k.to_string(mag) + "*") + mono;
    }
  }
  return out;
}

template <class F>
struct Presentation {
  std::string label;
  AlgebraMap<F> map;
  std::vector<Polynomial<F>> generators;
};

}  // namespace detail

/// Script reconstructing the rings, the presentation ideals and the kernel
/// equality assertions. Plain output is the canonical instance file with the
/// data as comments, so it replays through construct.
template <class F>
std::string export_script(const InstanceFile& file, F field, Dialect dialect, const GbOptions& opts = {}) {
  std::vector<detail::Presentation<F>> pres;
  if (const auto* inst = std::get_if<Instance>(&file.target)) {
    auto m = ReesModel<F>::make(field, *inst);
    pres.push_back({"Rees algebra", m.phi(), m.minors_C().generators()});
    pres.push_back({"special fiber ring", m.psi(), m.minors_B().generators()});
  } else {
    auto tm = TruncationModel<F>::make(field, std::get<TruncationInstance>(file.target));
    pres.push_back({"Rees algebra", tm.chi(), tm.rees_presentation(opts).generators()});
    pres.push_back({"special fiber ring", tm.fiber_map(), tm.fiber_presentation(opts).generators()});
  }
  const auto& spec = field_of(file.target);
  std::ostringstream os;
  std::string what = describe(file.target);

  if (dialect == Dialect::Plain) {
    os << "# reeskit instance (" << what << ")\n" << file.to_text();
    for (const auto& p : pres) {
      os << "#\n# " << p.label << " in k[" ;
      auto names = p.map.source()->names();
      for (std::size_t i = 0; i < names.size(); ++i) os << (i ? ", " : "") << names[i];
      os << "]\n";
      for (const auto& g : p.generators) os << "#   " << g.to_string() << "\n";
    }
    return os.str();
  }

  bool m2 = dialect == Dialect::M2;
  std::function<std::string(const std::string&)> rename = m2 ? detail::m2_name : detail::singular_name;
  auto var_list = [&](const RingPtr<F>& r) {
    std::string s;
    auto names = r->names();
    for (std::size_t i = 0; i < names.size(); ++i) s += (i ? ", " : "") + rename(names[i]);
    return s;
  };
  auto poly_list = [&](const std::vector<Polynomial<F>>& ps, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? sep : "") + detail::render(ps[i], rename);
    return s;
  };
  const auto& target = pres.front().map.target();

  if (m2) {
    os << "-- reeskit export (m2): " << what << "\n";
    os << "kk = " << (spec.kind == FieldKind::Rationals ? std::string("QQ") : "ZZ/" + std::to_string(spec.characteristic)) << ";\n";
    os << "Rtarget = kk[" << var_list(target) << ", MonomialOrder => GRevLex];\n";
    for (std::size_t k = 0; k < pres.size(); ++k) {
      const auto& p = pres[k];
      std::string src = "Src" + std::to_string(k + 1);
      os << "\n-- " << p.label << "\n";
      os << src << " = kk[" << var_list(p.map.source()) << ", MonomialOrder => GRevLex];\n";
      os << "use Rtarget;\n";
      os << "map" << k + 1 << " = map(Rtarget, " << src << ", {" << poly_list(p.map.images(), ", ") << "});\n";
      os << "use " << src << ";\n";
      os << "I" << k + 1 << " = ideal(" << (p.generators.empty() ? "0_" + src : poly_list(p.generators, ", ")) << ");\n";
      os << "assert(ker map" << k + 1 << " == I" << k + 1 << ");\n";
    }
    os << "\nprint \"kernel equalities hold\";\n";
    return os.str();
  }

  os << "// reeskit export (singular): " << what << "\n";
  std::string ch = spec.kind == FieldKind::Rationals ? "0" : std::to_string(spec.characteristic);
  os << "ring Rtarget = " << ch << ", (" << var_list(target) << "), dp;\n";
  for (std::size_t k = 0; k < pres.size(); ++k) {
    const auto& p = pres[k];
    std::string src = "Src" + std::to_string(k + 1), n = std::to_string(k + 1);
    os << "\n// " << p.label << "\n";
    os << "ring " << src << " = " << ch << ", (" << var_list(p.map.source()) << "), dp;\n";
    os << "ideal I" << n << " = " << (p.generators.empty() ? "0" : poly_list(p.generators, ",\n  ")) << ";\n";
    os << "setring Rtarget;\n";
    os << "map map" << n << " = " << src << ", " << poly_list(p.map.images(), ", ") << ";\n";
    os << "setring " << src << ";\n";
    os << "ideal K" << n << " = std(kernel(Rtarget, map" << n << "));\n";
    os << "ideal G" << n << " = std(I" << n << ");\n";
    os << "if (size(reduce(K" << n << ", G" << n << ")) != 0 || size(reduce(G" << n << ", K" << n << ")) != 0) { ERROR(\"" << p.label
       << ": kernel differs\"); }\n";
    os << "\"" << p.label << ": kernel equality holds\";\n";
  }
  return os.str();
}

inline std::string export_script(const InstanceFile& file, Dialect dialect, const GbOptions& opts = {}) {
  const auto& spec = field_of(file.target);
  if (spec.kind == FieldKind::Rationals) return export_script(file, Rationals{}, dialect, opts);
  return export_script(file, PrimeField(spec.characteristic), dialect, opts);
}

}  // namespace reeskit

#endif  // REESKIT_EXPORT_HPP
