#ifndef REESKIT_VERIFIER_HPP
#define REESKIT_VERIFIER_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <json.hpp>

#include "reeskit/spair.hpp"
#include "reeskit/truncation.hpp"

namespace reeskit {

using Json = nlohmann::ordered_json;

enum class CheckKind {
  GbMinors,
  InitialIdeal,
  KernelEqualityM,
  Dimension,
  ColonIdentity,
  InductionMembership,
  SymbolicPower,
  ReesPresentation,
  DivisorialIdentity,
  QuadraticGb,
  HeightQ,
  SPairCertificates,
};

inline const std::vector<std::pair<CheckKind, std::string>>& check_names() {
  static const std::vector<std::pair<CheckKind, std::string>> names{
      {CheckKind::GbMinors, "gb-minors"},
      {CheckKind::InitialIdeal, "initial-ideal"},
      {CheckKind::KernelEqualityM, "kernel-equality-M"},
      {CheckKind::Dimension, "dimension"},
      {CheckKind::ColonIdentity, "colon-identity"},
      {CheckKind::InductionMembership, "induction-membership"},
      {CheckKind::SymbolicPower, "symbolic-power"},
      {CheckKind::ReesPresentation, "rees-presentation"},
      {CheckKind::DivisorialIdentity, "divisorial-identity"},
      {CheckKind::QuadraticGb, "quadratic-gb"},
      {CheckKind::HeightQ, "height-Q"},
      {CheckKind::SPairCertificates, "spair-certificates"},
  };
  return names;
}

inline std::string to_string(CheckKind k) {
  for (const auto& [kind, name] : check_names()) {
    if (kind == k) return name;
  }
  return "?";
}

inline CheckKind parse_check(const std::string& name) {
  for (const auto& [kind, n] : check_names()) {
    if (n == name) return kind;
  }
  throw Error("unknown check '" + name + "'");
}

enum class Verdict { Pass, Fail, Aborted, BoundExhausted, Error };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Aborted:
      return "aborted";
    case Verdict::BoundExhausted:
      return "bound-exhausted";
    case Verdict::Error:
      return "error";
  }
  return "?";
}

using Target = std::variant<Instance, TruncationInstance>;

inline Json instance_json(const Target& target) {
  Json j;
  if (const auto* inst = std::get_if<Instance>(&target)) {
    j["mode"] = "powers";
    j["field"] = inst->field.to_string();
    j["n"] = inst->n;
    j["a"] = inst->a;
    if (inst->stripped_zeros) j["strippedZeros"] = inst->stripped_zeros;
  } else {
    const auto& ti = std::get<TruncationInstance>(target);
    j["mode"] = "truncation";
    j["field"] = ti.field.to_string();
    j["n"] = ti.n;
    j["f"] = ti.f;
    j["d"] = ti.d;
  }
  return j;
}

inline std::string describe(const Target& target) {
  if (const auto* inst = std::get_if<Instance>(&target)) return inst->describe();
  const auto& ti = std::get<TruncationInstance>(target);
  std::string s = "n=" + std::to_string(ti.n) + ", f=(";
  for (std::size_t i = 0; i < ti.f.size(); ++i) s += (i ? ", " : "") + ti.f[i];
  return s + "), d=" + std::to_string(ti.d);
}

inline const FieldSpec& field_of(const Target& target) {
  if (const auto* inst = std::get_if<Instance>(&target)) return inst->field;
  return std::get<TruncationInstance>(target).field;
}

struct CheckParams {
  std::uint64_t seed = 1;
  int random_submatrices = 5;
  std::vector<int> deltas;             // symbolic-power; empty means {1, ..., max a + 1}
  std::optional<int> witness_bound;    // default 2 * δ * max(a)
  GbOptions gb;
  bool redundant_h = false;
};

inline Json to_json(const GbReport& r) {
  Json j;
  j["basisSize"] = r.basis_size;
  j["maxDegree"] = r.max_degree;
  j["degrees"] = r.degrees;
  j["pairsGenerated"] = r.pairs_generated;
  j["pairsSkipped"] = r.pairs_skipped;
  j["pairsReduced"] = r.pairs_reduced_to_zero;
  j["elapsedMs"] = r.elapsed_ms;
  j["status"] = to_string(r.status);
  if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
  return j;
}

struct Report {
  CheckKind kind{};
  Target target;
  Verdict verdict = Verdict::Pass;
  std::string summary;
  Json evidence = Json::object();
  Json gb = Json::array();
  double elapsed_ms = 0;
  std::uint64_t seed = 0;

  bool passed() const { return verdict == Verdict::Pass; }

  Json to_json() const {
    Json j;
    j["check"] = reeskit::to_string(kind);
    j["instance"] = instance_json(target);
    j["verdict"] = reeskit::to_string(verdict);
    j["summary"] = summary;
    j["seed"] = seed;
    j["elapsedMs"] = elapsed_ms;
    j["gb"] = gb;
    j["evidence"] = evidence;
    return j;
  }

  std::string text(bool with_time = true) const {
    auto line = "[" + reeskit::to_string(verdict) + "] " + reeskit::to_string(kind) + " on " + describe(target) + ": " + summary;
    if (!with_time) return line;
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f", elapsed_ms);
    return line + " (" + ms + " ms)";
  }
};

namespace detail {

template <class F>
class Checker {
 public:
  Checker(F field, const Target& target, const CheckParams& params, Report& report)
      : field_(std::move(field)), target_(target), params_(params), report_(report) {}

  void run(CheckKind kind) {
    switch (kind) {
      case CheckKind::GbMinors:
        return gb_minors();
      case CheckKind::InitialIdeal:
        return initial_ideal_check();
      case CheckKind::KernelEqualityM:
        return kernel_equality();
      case CheckKind::Dimension:
        return dimension();
      case CheckKind::ColonIdentity:
        return colon_identity();
      case CheckKind::InductionMembership:
        return induction_membership();
      case CheckKind::SymbolicPower:
        return symbolic_power();
      case CheckKind::ReesPresentation:
        return rees_presentation();
      case CheckKind::DivisorialIdentity:
        return divisorial_identity();
      case CheckKind::QuadraticGb:
        return quadratic_gb();
      case CheckKind::HeightQ:
        return height_q();
      case CheckKind::SPairCertificates:
        return spair_certificates();
    }
  }

 private:
  // Powers-side model. For truncation targets the zero-free a-list is used.
  const ReesModel<F>& model() {
    if (!model_) {
      if (const auto* inst = std::get_if<Instance>(&target_)) {
        model_ = ReesModel<F>::make(field_, *inst);
      } else {
        const auto& tm = truncation();
        std::vector<int> a;
        for (int v : tm.a()) {
          if (v) a.push_back(v);
        }
        if (a.empty()) throw Error("every a_i is zero; there is no matrix to check");
        model_ = ReesModel<F>::make(field_, tm.n(), a);
      }
    }
    return *model_;
  }

  const TruncationModel<F>& truncation() {
    if (!trunc_) {
      const auto* ti = std::get_if<TruncationInstance>(&target_);
      if (!ti) throw Error("check '" + to_string(report_.kind) + "' needs a truncation instance");
      trunc_ = TruncationModel<F>::make(field_, *ti);
    }
    return *trunc_;
  }

  void record(const std::string& label, const Ideal<F>& ideal) {
    auto j = reeskit::to_json(ideal.groebner_report(params_.gb));
    j["ideal"] = label;
    report_.gb.push_back(j);
  }

  void fail(const std::string& summary, Json counterexample) {
    report_.verdict = Verdict::Fail;
    report_.summary = summary;
    report_.evidence["counterexample"] = std::move(counterexample);
  }

  static Json poly_list(const std::vector<Polynomial<F>>& ps) {
    Json j = Json::array();
    for (const auto& p : ps) j.push_back(p.to_string());
    return j;
  }

  static std::set<std::string> monomial_set(const RingPtr<F>& ring, const std::vector<Monomial>& ms) {
    std::set<std::string> out;
    for (const auto& m : ms) out.insert(Polynomial<F>(ring).monomial_string(m));
    return out;
  }

  // --- gb-minors -------------------------------------------------------------

  std::vector<std::pair<std::string, VarMatrix>> matrices_with_submatrices() {
    const auto& m = model();
    std::vector<std::pair<std::string, VarMatrix>> out{{"B", m.B}, {"C", m.C}};
    std::mt19937_64 rng(params_.seed);
    for (const auto* which : {&m.B, &m.C}) {
      std::string tag = which == &m.B ? "B" : "C";
      if (which->cols() < 2) continue;
      for (int k = 0; k < params_.random_submatrices; ++k) {
        std::uniform_int_distribution<std::size_t> size(2, which->cols());
        std::vector<std::size_t> all(which->cols());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(size(rng));
        std::sort(all.begin(), all.end());
        std::string label = tag + "[";
        for (std::size_t i = 0; i < all.size(); ++i) label += (i ? "," : "") + std::to_string(all[i]);
        out.push_back({label + "]", which->select_columns(all)});
      }
    }
    return out;
  }

  void gb_minors() {
    const auto& m = model();
    Json items = Json::array();
    std::size_t offenders = 0;
    for (const auto& [label, mat] : matrices_with_submatrices()) {
      const auto& ring = label[0] == 'B' ? m.t_ring : m.s_ring;
      auto minors = minors2(mat, ring);
      auto check = is_groebner(minors);
      Json item{{"matrix", label}, {"minors", minors.size()}, {"pairsChecked", check.pairs_checked}, {"offenders", check.offenders.size()}};
      if (!check.is_groebner) {
        Json bad = Json::array();
        for (std::size_t i = 0; i < check.offenders.size(); ++i) {
          bad.push_back({{"f", minors[check.offenders[i].first].to_string()},
                         {"g", minors[check.offenders[i].second].to_string()},
                         {"remainder", check.remainders[i].to_string()}});
        }
        item["offendingPairs"] = bad;
        offenders += check.offenders.size();
      }
      items.push_back(item);
    }
    record("I2(B)", m.minors_B());
    record("I2(C)", m.minors_C());
    report_.evidence["matrices"] = items;
    report_.evidence["reducedBasisSizeB"] = m.minors_B().groebner(params_.gb).size();
    report_.evidence["reducedBasisSizeC"] = m.minors_C().groebner(params_.gb).size();
    if (offenders) {
      fail(std::to_string(offenders) + " S-pairs of minors do not reduce to zero", items);
      return;
    }
    report_.summary = std::to_string(items.size()) + " matrices, minors form Gröbner bases";
  }

  // --- spair-certificates ----------------------------------------------------

  void spair_certificates() {
    const auto& m = model();
    Json items = Json::array();
    std::size_t bad = 0, total = 0;
    for (const auto& [label, mat, ring] : {std::tuple{"B", &m.B, m.t_ring}, std::tuple{"C", &m.C, m.s_ring}}) {
      MinorTable<F> table(*mat, ring);
      auto sum = certify_all_pairs(table);
      total += sum.pairs;
      Json item{{"matrix", label},   {"pairs", sum.pairs},   {"coprime", sum.coprime}, {"case1", sum.case1},
                {"case2", sum.case2}, {"case3", sum.case3}, {"equalLeadingTerms", sum.equal_lt}, {"unclassified", sum.unclassified.size()}};
      if (!sum.ok()) {
        Json ex = Json::array();
        for (const auto& c : sum.unclassified) ex.push_back({{"minor1", c.minor1}, {"minor2", c.minor2}});
        item["unclassifiedPairs"] = ex;
        bad += sum.unclassified.size();
      }
      items.push_back(item);
    }
    report_.evidence["matrices"] = items;
    if (bad) {
      fail(std::to_string(bad) + " minor pairs match no case", items);
      return;
    }
    report_.summary = std::to_string(total) + " minor pairs certified";
  }

  // --- initial-ideal ---------------------------------------------------------

  void initial_ideal_check() {
    const auto& m = model();
    Json items = Json::array();
    bool ok = true;
    Json cex;
    for (const auto& [label, mat, ideal] : {std::tuple{"B", &m.B, m.minors_B()}, std::tuple{"C", &m.C, m.minors_C()}}) {
      const auto& ring = ideal.ring();
      auto predicted = monomial_set(ring, predicted_initial_gens(*mat, ring));
      std::vector<Monomial> computed_monos;
      for (const auto& g : ideal.groebner(params_.gb)) computed_monos.push_back(g.leading_monomial());
      auto computed = monomial_set(ring, computed_monos);
      record(std::string("I2(") + label + ")", ideal);
      std::vector<std::string> only_pred, only_comp;
      std::set_difference(predicted.begin(), predicted.end(), computed.begin(), computed.end(), std::back_inserter(only_pred));
      std::set_difference(computed.begin(), computed.end(), predicted.begin(), predicted.end(), std::back_inserter(only_comp));
      items.push_back({{"matrix", label}, {"predicted", predicted.size()}, {"computed", computed.size()}});
      if (!only_pred.empty() || !only_comp.empty()) {
        ok = false;
        cex = {{"matrix", label}, {"onlyPredicted", only_pred}, {"onlyComputed", only_comp}};
      }
    }
    report_.evidence["matrices"] = items;
    if (!ok) return fail("predicted and computed initial ideals differ", cex);
    report_.summary = "initial ideals match the predicted diagonal monomials";
  }

  // --- kernel-equality-M -----------------------------------------------------

  void kernel_equality() {
    const auto& m = model();
    auto kphi = kernel_of_map(m.phi(), params_.gb);
    auto kpsi = kernel_of_map(m.psi(), params_.gb);
    auto c = m.minors_C();
    auto b = m.minors_B();
    record("ker phi", kphi);
    record("ker psi", kpsi);
    record("I2(C)", c);
    record("I2(B)", b);
    bool okc = kphi.equals(c, params_.gb);
    bool okb = kpsi.equals(b, params_.gb);
    report_.evidence["kernelPhiBasis"] = kphi.groebner(params_.gb).size();
    report_.evidence["kernelPsiBasis"] = kpsi.groebner(params_.gb).size();
    report_.evidence["primality"] = "certified by equality with the kernel of a map into a domain";
    if (!okc || !okb) {
      Json cex;
      if (!okc) cex["C"] = {{"kernel", poly_list(kphi.groebner(params_.gb))}, {"minors", poly_list(c.groebner(params_.gb))}};
      if (!okb) cex["B"] = {{"kernel", poly_list(kpsi.groebner(params_.gb))}, {"minors", poly_list(b.groebner(params_.gb))}};
      return fail("minor ideal differs from the kernel", cex);
    }
    report_.summary = "I2(C) = ker phi and I2(B) = ker psi";
  }

  // --- dimension -------------------------------------------------------------

  void dimension() {
    const auto& m = model();
    int n = m.n, r = m.r();
    Json items = Json::array();
    bool ok = true;
    Json cex;
    for (bool forC : {false, true}) {
      auto ideal = forC ? m.minors_C() : m.minors_B();
      auto in = initial_ideal(ideal, params_.gb);
      auto dim = monomial_dim(in);
      int expected = forC ? n + r : n + r - 1;
      auto U = m.dim_witness(forC);
      bool independent = is_independent(in, U);
      std::vector<std::string> names;
      for (auto v : U) names.push_back(ideal.ring()->name(v));
      items.push_back({{"matrix", forC ? "C" : "B"}, {"dimension", dim.dimension}, {"expected", expected}, {"witness", names}, {"witnessIndependent", independent}});
      if (dim.dimension != expected || static_cast<int>(U.size()) != expected || !independent) {
        ok = false;
        cex = items.back();
      }
    }
    report_.evidence["matrices"] = items;
    if (!ok) return fail("dimension or witness mismatch", cex);
    report_.summary = "dim = n+r-1 for B and n+r for C; witness U independent";
  }

  // --- colon-identity --------------------------------------------------------

  void colon_identity() {
    const auto& m = model();
    if (m.r() < 2) throw Error("colon-identity needs r >= 2; for r = 1 the colon is the unit ideal and P is not height one");
    auto b = m.minors_B();
    auto top = m.top_variable();
    auto num = b + Ideal<F>(m.t_ring, {top});
    auto Kpow = m.K().power(m.a.back());
    auto colon = ideal_colon(num, Kpow, params_.gb);
    auto P = m.P() + b;
    bool ok = colon.equals(P, params_.gb);
    record("colon", colon);
    report_.evidence["numerator"] = top.to_string() + " + I2(B)";
    report_.evidence["denominatorGenerators"] = Kpow.generators().size();
    report_.evidence["colonBasis"] = poly_list(colon.groebner(params_.gb));
    if (!ok) return fail("colon differs from P", {{"colon", poly_list(colon.groebner(params_.gb))}, {"P", poly_list(P.groebner(params_.gb))}});
    report_.summary = "(" + top.to_string() + ") : K^" + std::to_string(m.a.back()) + " = P modulo I2(B)";
  }

  // --- induction-membership --------------------------------------------------

  void induction_membership() {
    const auto& m = model();
    auto target = m.minors_B() + Ideal<F>(m.t_ring, {m.top_variable()});
    std::size_t checked = 0;
    int ar = m.a.back();
    for (const auto& j : multi_index_set(ar, m.n, false)) {
      auto T = Polynomial<F>::variable(m.t_ring, t_name(m.r(), j));
      int e = ar - j.back();
      auto gens = e == 0 ? std::vector<Polynomial<F>>{Polynomial<F>::one(m.t_ring)} : m.K().power(e).generators();
      for (const auto& g : gens) {
        ++checked;
        if (!target.contains(T * g, params_.gb)) return fail("membership fails", {{"element", (T * g).to_string()}, {"index", j}});
      }
    }
    record("I2(B) + (T_top)", target);
    report_.evidence["memberships"] = checked;
    report_.summary = std::to_string(checked) + " products T_{r,j} K^{a_r - j_1} lie in (T_top)";
  }

  // --- symbolic-power --------------------------------------------------------

  void symbolic_power() {
    const auto& m = model();
    auto b = m.minors_B();
    auto K = m.K();
    auto Kb = K + b;
    int amax = *std::max_element(m.a.begin(), m.a.end());
    auto deltas = params_.deltas;
    if (deltas.empty()) {
      for (int d = 1; d <= amax + 1; ++d) deltas.push_back(d);
    }
    const auto& deg = m.t_ring->grading("Deg");
    std::vector<std::size_t> deg0;
    for (std::size_t v = 0; v < deg.size(); ++v) {
      if (deg[v] == 0) deg0.push_back(v);
    }
    Json per = Json::array();
    Verdict worst = Verdict::Pass;
    for (int delta : deltas) {
      int bound = params_.witness_bound.value_or(2 * delta * amax);
      auto gens = a_geq_generators(m.t_ring, delta);
      auto Kd = K.power(delta);
      auto Kdb = Kd + b;
      Json item{{"delta", delta}, {"aGeq", poly_list(gens)}, {"witnessDegreeBound", bound}};
      // (i) K^δ ⊆ A_{>=δ}
      Ideal<F> Ageq = Ideal<F>(m.t_ring, gens) + b;
      for (const auto& p : Kd.generators()) {
        auto w = p.weighted_degree("Deg");
        if (!w || *w < delta || !Ageq.contains(p, params_.gb)) {
          item["counterexample"] = {{"part", "K^delta in A_geq"}, {"element", p.to_string()}};
          worst = Verdict::Fail;
        }
      }
      // (ii) A_{>=δ} ⊆ K
      for (const auto& g : gens) {
        if (!Kb.contains(g, params_.gb)) {
          item["counterexample"] = {{"part", "A_geq in K"}, {"element", g.to_string()}};
          worst = Verdict::Fail;
        }
      }
      // (iii) Deg-0 witnesses f with f*g in K^δ + I2(B), f outside K
      Json witnesses = Json::array();
      for (const auto& g : gens) {
        auto w = find_witness(g, Kdb, Kb, deg0, bound);
        if (!w) {
          item["unmatched"] = g.to_string();
          if (worst == Verdict::Pass) worst = Verdict::BoundExhausted;
          continue;
        }
        witnesses.push_back({{"generator", g.to_string()}, {"witness", w->to_string()}});
      }
      item["witnesses"] = witnesses;
      record("K^" + std::to_string(delta) + " + I2(B)", Kdb);
      per.push_back(item);
    }
    report_.evidence["deltas"] = per;
    report_.verdict = worst;
    if (worst == Verdict::Fail) {
      report_.evidence["counterexample"] = per;
      report_.summary = "A_geq and K^(delta) differ";
    } else if (worst == Verdict::BoundExhausted) {
      report_.summary = "witness search exhausted its degree bound";
    } else {
      report_.summary = "K^(delta) = A_geq certified for " + std::to_string(deltas.size()) + " values of delta";
    }
  }

  std::optional<Polynomial<F>> find_witness(const Polynomial<F>& g, const Ideal<F>& Kdb, const Ideal<F>& Kb, const std::vector<std::size_t>& vars, int bound) {
    const auto& ring = g.ring();
    for (int total = 0; total <= bound; ++total) {
      std::optional<Polynomial<F>> found;
      Monomial cur(ring->nvars());
      auto rec = [&](auto&& self, std::size_t start, int left) -> bool {
        if (left == 0) {
          auto f = Polynomial<F>::monomial(ring, cur);
          if (Kdb.contains(f * g, params_.gb) && !Kb.contains(f, params_.gb)) {
            found = f;
            return true;
          }
          return false;
        }
        for (std::size_t k = start; k < vars.size(); ++k) {
          cur.set(vars[k], cur[vars[k]] + 1);
          bool hit = self(self, k, left - 1);
          cur.set(vars[k], cur[vars[k]] - 1);
          if (hit) return true;
        }
        return false;
      };
      if (rec(rec, 0, total)) return found;
      if (vars.empty()) break;
    }
    return std::nullopt;
  }

  // --- rees-presentation -----------------------------------------------------

  void rees_presentation() {
    const auto& tm = truncation();
    auto hs = tm.h_polynomials(params_.redundant_h);
    auto chi = tm.chi();
    Json hlist = Json::array();
    for (std::size_t k = 0; k < hs.polys.size(); ++k) {
      const auto& h = hs.polys[k];
      auto bx = h.weighted_degree("std-x");
      auto bt = h.weighted_degree("std-T");
      Json item{{"h", h.to_string()}, {"pair", {hs.labels[k].i, hs.labels[k].j}}, {"word", hs.labels[k].basis_word}};
      item["bidegree"] = bx && bt ? Json::array({*bx, *bt}) : Json("inhomogeneous");
      hlist.push_back(item);
      if (!chi.apply(h).is_zero()) return fail("h does not vanish under chi", item);
      long want_x = tm.large_d() ? 0 : tm.delta();
      if (!bx || !bt || *bx != want_x || *bt != 1) return fail("h has the wrong bidegree", item);
    }
    report_.evidence["h"] = hlist;
    auto pres = tm.rees_presentation(params_.gb);
    auto oracle = kernel_of_map(chi, params_.gb);
    record("presentation", pres);
    record("ker chi", oracle);
    bool ok = pres.equals(oracle, params_.gb);
    auto fib = tm.fiber_presentation(params_.gb);
    auto foracle = kernel_of_map(tm.fiber_map(), params_.gb);
    record("fiber presentation", fib);
    record("fiber kernel", foracle);
    bool fok = fib.equals(foracle, params_.gb);
    report_.evidence["reesBasis"] = poly_list(pres.groebner(params_.gb));
    report_.evidence["fiberBasis"] = poly_list(fib.groebner(params_.gb));
    report_.evidence["branch"] = tm.large_d() ? "d >= d1 + d2" : "r = 2, d < d1 + d2 (colon by x1^delta)";
    if (!ok || !fok) {
      Json cex;
      if (!ok) cex["rees"] = {{"presentation", poly_list(pres.groebner(params_.gb))}, {"kernel", poly_list(oracle.groebner(params_.gb))}};
      if (!fok) cex["fiber"] = {{"presentation", poly_list(fib.groebner(params_.gb))}, {"kernel", poly_list(foracle.groebner(params_.gb))}};
      return fail("presentation differs from the kernel", cex);
    }
    report_.summary = "Rees and fiber presentations equal the kernels (" + std::to_string(hs.polys.size()) + " h)";
  }

  // --- divisorial-identity ---------------------------------------------------

  void divisorial_identity() {
    const auto& tm = truncation();
    if (tm.r() != 2) throw Error("divisorial-identity applies to r = 2 only");
    const auto& S = tm.rees.s_ring;
    int delta = tm.delta();
    auto minors = tm.rees.minors_C();
    auto A = kernel_of_map(tm.chi(), params_.gb);
    auto x1 = Polynomial<F>::variable(S, x_name(1)).pow(delta);
    auto lhs = Ideal<F>(S, {x1}) * A + minors;
    auto L = delta == 0 ? Ideal<F>::unit(S) : Ideal<F>(S, a_geq_generators(S, delta));
    auto rhs = Ideal<F>(S, tm.h_polynomials().polys) * L + minors;
    record("x1^delta A + I2(C)", lhs);
    record("h L^(delta) + I2(C)", rhs);
    report_.evidence["delta"] = delta;
    report_.evidence["LdeltaGenerators"] = L.generators().size();
    if (!lhs.equals(rhs, params_.gb)) {
      return fail("the two sides differ", {{"lhs", poly_list(lhs.groebner(params_.gb))}, {"rhs", poly_list(rhs.groebner(params_.gb))}});
    }
    report_.summary = "x1^" + std::to_string(delta) + " A = (h) L^(" + std::to_string(delta) + ") modulo I2(C)";
  }

  // --- quadratic-gb ----------------------------------------------------------

  /// Reduced bases under τ-grevlex, grevlex with the variables reversed, and lex;
  /// returns the name of the first order giving degree <= 2.
  std::optional<std::string> quadratic_order(const Ideal<F>& ideal, Json& tried) {
    const auto& ring = ideal.ring();
    auto names = ring->names();
    auto reversed = names;
    std::reverse(reversed.begin(), reversed.end());
    std::vector<std::pair<std::string, RingPtr<F>>> rings{
        {"tau-grevlex", ring},
        {"reversed-grevlex", Ring<F>::generic(ring->field(), reversed)},
        {"tau-lex", ring->with_order(MonomialOrder::lex())},
    };
    for (const auto& [name, r] : rings) {
      auto gb = ideal.change_ring(r).groebner(params_.gb);
      std::uint32_t top = 0;
      for (const auto& g : gb) top = std::max(top, g.total_degree());
      tried.push_back({{"order", name}, {"basisSize", gb.size()}, {"maxDegree", top}});
      if (top <= 2) return name;
    }
    return std::nullopt;
  }

  void quadratic_gb() {
    std::vector<std::pair<std::string, Ideal<F>>> ideals;
    if (std::holds_alternative<Instance>(target_)) {
      ideals.push_back({"I2(C)", model().minors_C()});
      ideals.push_back({"I2(B)", model().minors_B()});
    } else {
      ideals.push_back({"rees", truncation().rees_presentation(params_.gb)});
      ideals.push_back({"fiber", truncation().fiber_presentation(params_.gb)});
    }
    Json items = Json::array();
    for (const auto& [label, ideal] : ideals) {
      Json tried = Json::array();
      auto order = quadratic_order(ideal, tried);
      items.push_back({{"ideal", label}, {"orders", tried}, {"quadraticUnder", order ? Json(*order) : Json(nullptr)}});
      record(label, ideal);
      if (!order) {
        report_.evidence["ideals"] = items;
        return fail("no tested order gives a quadratic Gröbner basis for the " + label + " ideal", items.back());
      }
    }
    report_.evidence["ideals"] = items;
    report_.evidence["note"] = "Koszul proxy: a quadratic Gröbner basis implies Koszulness; Koszulness itself is not decided";
    report_.summary = "quadratic Gröbner bases found (Koszul proxy)";
  }

  // --- height-Q --------------------------------------------------------------

  void height_q() {
    const auto& tm = truncation();
    auto A = kernel_of_map(tm.chi(), params_.gb);
    auto minors = tm.rees.minors_C();
    int dim_ri = monomial_dim(initial_ideal(A, params_.gb)).dimension;
    int dim_rm = monomial_dim(initial_ideal(minors, params_.gb)).dimension;
    record("ker chi", A);
    record("I2(C)", minors);
    report_.evidence["dimReesI"] = dim_ri;
    report_.evidence["dimReesM"] = dim_rm;
    report_.evidence["heightA"] = dim_rm - dim_ri;
    if (dim_ri != tm.n() + 1 || dim_rm - dim_ri != tm.r() - 1) {
      return fail("dimension count differs", {{"dimReesI", dim_ri}, {"expectedDimReesI", tm.n() + 1}, {"heightA", dim_rm - dim_ri}, {"expectedHeight", tm.r() - 1}});
    }
    report_.summary = "dim R(I) = n+1 and ht A = r-1";
  }

  F field_;
  const Target& target_;
  const CheckParams& params_;
  Report& report_;
  std::optional<ReesModel<F>> model_;
  std::optional<TruncationModel<F>> trunc_;
};

}  // namespace detail

/// Runs one check. Guard aborts become verdict "aborted"; other errors propagate.
inline Report run_check(CheckKind kind, const Target& target, const CheckParams& params = {}) {
  Report report;
  report.kind = kind;
  report.target = target;
  report.seed = params.seed;
  auto start = std::chrono::steady_clock::now();
  try {
    const auto& spec = field_of(target);
    if (spec.kind == FieldKind::Rationals) {
      detail::Checker<Rationals>(Rationals{}, target, params, report).run(kind);
    } else {
      detail::Checker<PrimeField>(PrimeField(spec.characteristic), target, params, report).run(kind);
    }
  } catch (const GuardExceeded& e) {
    report.verdict = Verdict::Aborted;
    report.summary = std::string("resource guard: ") + e.what();
    report.evidence["partial"] = to_json(e.report());
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

struct PlanItem {
  CheckKind kind;
  Target target;
  CheckParams params;
};

/// Runs every item with at most `jobs` concurrent workers; reports come back in
/// plan order. Item errors are captured as verdict "error".
inline std::vector<Report> sweep(const std::vector<PlanItem>& plan, unsigned jobs = 1) {
  if (plan.empty()) throw Error("empty verification plan");
  std::vector<Report> out(plan.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < plan.size(); i = next++) {
      try {
        out[i] = run_check(plan[i].kind, plan[i].target, plan[i].params);
      } catch (const std::exception& e) {
        Report r;
        r.kind = plan[i].kind;
        r.target = plan[i].target;
        r.seed = plan[i].params.seed;
        r.verdict = Verdict::Error;
        r.summary = e.what();
        out[i] = std::move(r);
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(plan.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace reeskit

#endif  // REESKIT_VERIFIER_HPP
