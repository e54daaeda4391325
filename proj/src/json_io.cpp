// Copyright 2026 The cubicpair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cubicpair/json_io.hpp"

#include <algorithm>
#include <set>

#include "cubicpair/error.hpp"

namespace cubicpair {
namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(Errc::malformed_input, what); }

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    malformed(e.what());
  }
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

Json vector_to_json(const Vec& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v[i].value());
  return out;
}

Vec vector_from_json(const Json& j, const PrimeField& field, Index expected, const char* what) {
  if (!j.is_array() || static_cast<Index>(j.size()) != expected) {
    malformed(std::string(what) + " must have " + std::to_string(expected) + " entries");
  }
  Vec v = zero_vector(field, expected);
  for (Index i = 0; i < expected; ++i) v[i] = field(as_int(j[static_cast<std::size_t>(i)], what));
  return v;
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <Side S>
Json optional_form(const std::optional<Form<S>>& f) {
  return f ? form_to_json(*f) : Json(nullptr);
}

Json cubic_json(const CubicFormResult& c) {
  return {{"is_zero", c.is_zero},
          {"is_nondegenerate", c.is_nondegenerate},
          {"is_smooth", c.is_smooth},
          {"q_in_jf2", c.q_in_jf2},
          {"span_matches_colon", c.span_matches_colon}};
}

Json moduli_json(const ModuliReport& m) {
  return {{"tdef_xy", m.dim_tdef_xy},         {"h11_new", m.dim_h11_new},
          {"ker_alpha", m.dim_ker_alpha},     {"rank_mq_s3", m.rank_mq_s3},
          {"coker_alpha", m.dim_coker_alpha}, {"jf3_cap_qv", m.dim_jf3_cap_qv},
          {"milnor_3", m.milnor_dim_3},       {"delta_b_nonzero", m.delta_b_nonzero}};
}

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(e.what());
  }
}

template <Side S>
Json form_to_json(const Form<S>& f) {
  const MonomialBasis& b = f.ring()->basis(f.degree());
  Json j;
  j["p"] = f.field().modulus();
  j["n"] = f.ring()->nvars();
  j["degree"] = f.degree();
  if (S == Side::dual) j["side"] = "dual";
  Json terms = Json::array();
  for (Index i = 0; i < b.size(); ++i) {
    if (f[i].is_zero()) continue;
    terms.push_back({{"exps", b[i]}, {"c", f[i].value()}});
  }
  j["coeffs"] = std::move(terms);
  return j;
}

RingPtr ring_for(std::uint32_t p, int nvars, int degree) {
  if (nvars < 1 || nvars > 10) malformed("number of variables out of range");
  return Ring::make(p, nvars, std::max(8, degree));
}

template <Side S>
Form<S> form_from_json(const Json& j, const RingPtr& ring) {
  return guarded([&] {
    if (!j.is_object()) malformed("a polynomial must be a JSON object");
    if (as_int(j.at("p"), "p") != ring->field().modulus()) malformed("polynomial prime differs");
    if (as_int(j.at("n"), "n") != ring->nvars()) malformed("polynomial arity differs");
    const std::int64_t degree = as_int(j.at("degree"), "degree");
    if (degree < 0 || degree > ring->max_degree()) malformed("degree out of range");
    const std::string side = j.value("side", std::string("primal"));
    if (side != (S == Side::dual ? "dual" : "primal")) malformed("unexpected side " + side);

    const int d = static_cast<int>(degree);
    const MonomialBasis& b = ring->basis(d);
    Form<S> f(ring, d);
    std::set<Index> seen;
    for (const Json& term : j.at("coeffs")) {
      const Json& exps = term.at("exps");
      if (!exps.is_array() || static_cast<int>(exps.size()) != ring->nvars()) malformed("bad exponent vector");
      Exponents e;
      int total = 0;
      for (const Json& x : exps) {
        const std::int64_t v = as_int(x, "exponent");
        if (v < 0 || v > d) malformed("exponent out of range");
        e.push_back(static_cast<int>(v));
        total += static_cast<int>(v);
      }
      if (total != d) malformed("term degree differs from the form degree");
      const Index i = b.find(e);
      if (!seen.insert(i).second) malformed("repeated monomial");
      f[i] = ring->field()(as_int(term.at("c"), "coefficient"));
    }
    return f;
  });
}

HomForm form_from_json(const Json& j) {
  return guarded([&] {
    const std::int64_t p = as_int(j.at("p"), "p");
    if (p < 2 || p > INT32_MAX) malformed("prime out of range");
    const RingPtr ring = ring_for(static_cast<std::uint32_t>(p), static_cast<int>(as_int(j.at("n"), "n")),
                                  static_cast<int>(as_int(j.at("degree"), "degree")));
    return form_from_json<Side::primal>(j, ring);
  });
}

Json pair_to_json(const PairInput& pair, std::optional<std::uint64_t> seed) {
  Json j;
  if (seed) j["seed"] = *seed;
  j["p"] = pair.F.field().modulus();
  j["n"] = pair.F.ring()->nvars();
  j["F"] = form_to_json(pair.F);
  j["Q"] = form_to_json(pair.Q);
  return j;
}

PairInput pair_from_json(const Json& j) {
  return guarded([&] {
    const std::int64_t p = as_int(j.at("F").at("p"), "p");
    if (p < 2 || p > INT32_MAX) malformed("prime out of range");
    const int n = static_cast<int>(as_int(j.at("F").at("n"), "n"));
    const RingPtr ring = ring_for(static_cast<std::uint32_t>(p), n);
    PairInput pair{form_from_json<Side::primal>(j.at("F"), ring), form_from_json<Side::primal>(j.at("Q"), ring)};
    if (pair.F.degree() != 3) malformed("F must be a cubic");
    if (pair.Q.degree() != 2) malformed("Q must be a quadric");
    return pair;
  });
}

std::optional<std::uint64_t> seed_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("seed")) return std::nullopt;
  if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer()) malformed("seed must be an integer");
  return j["seed"].get<std::uint64_t>();
}

Json pairing_data_to_json(const PairData& data) {
  Json rows = Json::array();
  for (Index a = 0; a < data.T.rows(); ++a) rows.push_back(vector_to_json(data.T.row(a).transpose()));
  return {{"p", data.ring->field().modulus()},
          {"n", data.ring->nvars()},
          {"T", std::move(rows)},
          {"c", vector_to_json(data.c)}};
}

PairData pairing_data_from_json(const Json& j) {
  return guarded([&] {
    const std::int64_t p = as_int(j.at("p"), "p");
    if (p < 2 || p > INT32_MAX) malformed("prime out of range");
    const int n = j.contains("n") ? static_cast<int>(as_int(j["n"], "n")) : 5;
    PairData d;
    d.ring = ring_for(static_cast<std::uint32_t>(p), n);
    const PrimeField& field = d.ring->field();
    const Index rows = d.ring->dim(2);
    const Index cols = d.ring->dim(3);
    const Json& t = j.at("T");
    if (!t.is_array() || static_cast<Index>(t.size()) != rows) {
      malformed("T must have " + std::to_string(rows) + " rows");
    }
    d.T = zeros(field, rows, cols);
    for (Index a = 0; a < rows; ++a) d.T.row(a) = vector_from_json(t[static_cast<std::size_t>(a)], field, cols, "T row").transpose();
    d.c = j.contains("c") ? vector_from_json(j["c"], field, cols, "c") : zero_vector(field, cols);
    return d;
  });
}

Json report_to_json(const AnalysisReport& r) {
  Json j;
  j["seed"] = optional_json(r.seed);
  j["p"] = r.pair.F.field().modulus();
  j["F"] = form_to_json(r.pair.F);
  j["Q"] = form_to_json(r.pair.Q);
  j["C"] = r.cubic ? form_to_json(r.cubic->C) : Json(nullptr);
  j["lambda"] = r.cubic ? form_to_json(normalized(r.cubic->lambda)) : Json(nullptr);

  Json cert = r.cubic ? cubic_json(*r.cubic) : Json::object();
  cert["x_smooth"] = r.x_smooth;
  cert["y_smooth"] = r.surface.smooth;
  j["certificates"] = std::move(cert);

  Json dims;
  if (r.cubic) {
    dims["jc2"] = r.cubic->j_c2_dim;
    dims["colonF5Q_3"] = r.cubic->colon_f5q_3;
    dims["colonF4Q_2"] = r.cubic->colon_f4q_2;
    dims["mq_rank"] = r.cubic->mq_rank;
    dims["jc6_codim"] = r.cubic->jc6_codim;
  }
  dims["quintic_perp"] = optional_json(r.quintic_perp_dim);
  dims["y_codim"] = r.surface.codim;
  dims["hilbert"] = r.hilbert;
  dims["moduli"] = r.moduli ? moduli_json(*r.moduli) : Json(nullptr);
  j["dims"] = std::move(dims);

  j["quintic"] = optional_form(r.quintic);
  if (r.mf) j["mf"] = form_to_json(*r.mf);
  j["generic"] = r.generic();
  j["degeneracies"] = r.degeneracies;
  return j;
}

Json torelli_to_json(const TorelliResult& r) {
  Json j;
  j["success"] = r.success;
  j["stage"] = r.stage;
  j["failure_reason"] = r.failure_reason;
  j["error"] = r.error ? Json(std::string(to_string(*r.error))) : Json(nullptr);
  j["F_hat"] = optional_form(r.F_hat);
  j["Q_hat"] = optional_form(r.Q_hat);
  j["q_ambiguity_dim"] = r.q_ambiguity_dim;
  j["data_reproduced"] = r.data_reproduced;
  if (r.f_proportional || r.jf3_exact) {
    j["truth"] = {{"jf3_exact", optional_json(r.jf3_exact)},
                  {"jf2_exact", optional_json(r.jf2_exact)},
                  {"f_proportional", optional_json(r.f_proportional)},
                  {"q_proportional", optional_json(r.q_proportional)},
                  {"q_class_proportional", optional_json(r.q_class_proportional)}};
  }
  return j;
}

Json search_to_json(const SearchSummary& s, const SearchOptions& o, std::uint32_t p) {
  const double n = s.trials;
  Json j;
  j["seed"] = o.seed;
  j["p"] = p;
  j["trials"] = s.trials;
  j["family"] = o.fermat ? "fermat" : "random";
  j["counts"] = {{"smooth", s.smooth},   {"nondegenerate", s.nondegenerate}, {"zero", s.zero},
                 {"generic", s.generic}, {"q_in_jf2", s.q_in_jf2}};
  j["fractions"] = {{"smooth", s.smooth / n}, {"nondegenerate", s.nondegenerate / n}, {"zero", s.zero / n}};
  j["zero_iff_q_in_jf2"] = s.zero_iff_q_in_jf2;
  j["smooth_implies_nondegenerate"] = s.smooth_implies_nondegenerate;
  Json ex = Json::array();
  for (const SearchTrial& t : s.exceptional) {
    ex.push_back({{"index", t.index},
                  {"seed", t.seed},
                  {"degeneracies", t.report.degeneracies},
                  {"pair", pair_to_json(t.report.pair, t.seed)}});
  }
  j["exceptional"] = std::move(ex);
  return j;
}

Json binary_to_json(const HomForm& F, const BinarySyzygy& r) {
  return {{"p", F.field().modulus()},
          {"F", form_to_json(F)},
          {"has_syzygy", r.has_syzygy},
          {"span_dim", r.span_dim},
          {"form", form_to_json(r.form)}};
}

template Json form_to_json<Side::primal>(const Form<Side::primal>&);
template Json form_to_json<Side::dual>(const Form<Side::dual>&);
template Form<Side::primal> form_from_json<Side::primal>(const Json&, const RingPtr&);
template Form<Side::dual> form_from_json<Side::dual>(const Json&, const RingPtr&);

}  // namespace cubicpair
