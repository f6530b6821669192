/**************************************************************************
 * cli.cpp
 *
 * Copyright 2026 The tgrs Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include "tgrs/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>

namespace tgrs::cli {

namespace {

constexpr const char* exceeded_marker = "budget_exceeded";

std::string at(const std::string& key, std::size_t i) { return key + "[" + std::to_string(i) + "]"; }

const json& require(const json& doc, const char* key) {
    if (!doc.contains(key)) throw ParamsError(key, "missing required key");
    return doc.at(key);
}

std::uint64_t as_uint(const json& j, const std::string& path) {
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    if (j.is_number_integer()) {
        if (j.get<std::int64_t>() < 0) throw ParamsError(path, "must be non-negative");
        return static_cast<std::uint64_t>(j.get<std::int64_t>());
    }
    throw ParamsError(path, "expected an integer");
}

std::vector<Elem> elements_from_json(const Field& f, const json& j, const std::string& key) {
    if (!j.is_array()) throw ParamsError(key, "expected an array");
    std::vector<Elem> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(element_from_json(f, j[i], at(key, i)));
    return out;
}

json elements_to_json(const Field& f, const std::vector<Elem>& xs) {
    json out = json::array();
    for (auto x : xs) out.push_back(element_to_json(f, x));
    return out;
}

// Attributes a library validation message to the params key it concerns.
std::string key_of(const std::string& msg) {
    for (const char* key : {"alpha", "eta", "v", "k"})
        if (msg.rfind(key, 0) == 0) return key;
    if (msg.find("generator matrix") != std::string::npos) return "eta";
    if (msg.find("evaluation set") != std::string::npos) return "alpha";
    return "";
}

json field_json(const Field& f) {
    json out;
    out["q"] = f.order();
    out["p"] = f.characteristic();
    out["m"] = f.degree();
    if (f.degree() > 1) out["modulus"] = f.modulus();
    return out;
}

json bounded_json(const Bounded<std::size_t>& b) {
    if (b.exceeded()) return exceeded_marker;
    return *b.value;
}

json certificate_json(const std::optional<NonGrsCertificate>& c) {
    if (!c) return nullptr;
    json out;
    out["which"] = c->which == NonGrsCertificate::Which::Square ? "square" : "dual_square";
    out["computed_dim"] = c->computed_dim;
    out["grs_dim"] = c->grs_dim;
    out["description"] = c->describe();
    return out;
}

std::string compact(const json& j) { return j.dump(); }

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParamsError("--out", "cannot open " + path + " for writing");
    f << text;
    if (!f) throw ParamsError("--out", "write to " + path + " failed");
}

}  // namespace

// ---------------------------------------------------------------- params I/O

json element_to_json(const Field& f, Elem a) {
    if (f.degree() == 1) return a.v;
    return f.coeffs(a);
}

Elem element_from_json(const Field& f, const json& j, const std::string& path) {
    if (f.degree() == 1) {
        const std::uint64_t x = as_uint(j, path);
        if (x >= f.order()) throw ParamsError(path, "must lie in [0, " + std::to_string(f.order()) + ")");
        return f.element(x);
    }
    if (!j.is_array()) throw ParamsError(path, "expected a coefficient array for " + f.name());
    if (j.size() > f.degree()) throw ParamsError(path, "more than " + std::to_string(f.degree()) + " coefficients");
    std::vector<std::uint32_t> c(f.degree(), 0);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::uint64_t x = as_uint(j[i], at(path, i));
        if (x >= f.characteristic())
            throw ParamsError(at(path, i), "coefficient must lie in [0, " + std::to_string(f.characteristic()) + ")");
        c[i] = static_cast<std::uint32_t>(x);
    }
    return f.from_coeffs(c);
}

Field field_from_json(const json& doc) {
    const std::uint64_t q = as_uint(require(doc, "q"), "q");
    Field base = Field::prime(2);
    try {
        if (q > Field::max_order) throw InvalidArgument("field order exceeds 2^16");
        base = Field::of_order(static_cast<std::uint32_t>(q));
    } catch (const InvalidArgument& e) {
        throw ParamsError("q", e.what());
    }
    if (!doc.contains("modulus") || doc.at("modulus").is_null()) return base;
    if (base.degree() == 1) throw ParamsError("modulus", "only allowed for extension fields");
    const json& m = doc.at("modulus");
    if (!m.is_array()) throw ParamsError("modulus", "expected a coefficient array");
    std::vector<std::uint32_t> coeffs;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const std::uint64_t c = as_uint(m[i], at("modulus", i));
        if (c > std::numeric_limits<std::uint32_t>::max()) throw ParamsError(at("modulus", i), "out of range");
        coeffs.push_back(static_cast<std::uint32_t>(c));
    }
    if (coeffs.size() != base.degree() + 1)
        throw ParamsError("modulus", "expected " + std::to_string(base.degree() + 1) + " coefficients");
    try {
        return Field::extension(base.characteristic(), coeffs);
    } catch (const InvalidArgument& e) {
        throw ParamsError("modulus", e.what());
    }
}

TgrsParams parse_params(const json& doc) {
    if (!doc.is_object()) throw ParamsError("", "params document must be a JSON object");
    const Field f = field_from_json(doc);
    const std::vector<Elem> alpha = elements_from_json(f, require(doc, "alpha"), "alpha");
    const std::uint64_t k = as_uint(require(doc, "k"), "k");
    const std::vector<Elem> eta = elements_from_json(f, require(doc, "eta"), "eta");
    if (eta.empty()) throw ParamsError("eta", "must have at least one entry");
    std::vector<Elem> v(alpha.size(), f.one());
    if (doc.contains("v") && !doc.at("v").is_null()) v = elements_from_json(f, doc.at("v"), "v");
    if (doc.contains("n") && as_uint(doc.at("n"), "n") != alpha.size())
        throw ParamsError("n", "does not match the length of alpha (" + std::to_string(alpha.size()) + ")");
    if (doc.contains("ell") && as_uint(doc.at("ell"), "ell") + 1 != eta.size())
        throw ParamsError("ell", "does not match the length of eta minus one (" + std::to_string(eta.size() - 1) + ")");
    if (v.size() != alpha.size()) throw ParamsError("v", "length differs from alpha");
    try {
        return TgrsParams(EvalSet(f, alpha), v, static_cast<std::size_t>(k), eta);
    } catch (const InvalidArgument& e) {
        throw ParamsError(key_of(e.what()), e.what());
    }
}

TgrsParams load_params(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParamsError("--params", "cannot open " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParamsError("", std::string("malformed JSON in ") + path + ": " + e.what());
    }
    return parse_params(doc);
}

json params_to_json(const TgrsParams& p) {
    const Field& f = p.field();
    json out;
    out["q"] = f.order();
    if (f.degree() > 1) out["modulus"] = f.modulus();
    out["n"] = p.n();
    out["k"] = p.k();
    out["ell"] = p.ell();
    out["alpha"] = elements_to_json(f, p.alpha().alpha());
    out["v"] = elements_to_json(f, p.v());
    out["eta"] = elements_to_json(f, p.eta());
    return out;
}

json matrix_to_json(const Matrix& m) {
    json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    json data = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) data.push_back(element_to_json(m.field(), m(i, j)));
    out["data"] = std::move(data);
    return out;
}

Matrix matrix_from_json(const Field& f, const json& j, const std::string& path) {
    if (!j.is_object()) throw ParamsError(path, "expected {rows, cols, data}");
    const std::uint64_t r = as_uint(require(j, "rows"), path + ".rows");
    const std::uint64_t c = as_uint(require(j, "cols"), path + ".cols");
    const json& data = require(j, "data");
    if (!data.is_array() || data.size() != r * c)
        throw ParamsError(path + ".data", "expected " + std::to_string(r * c) + " entries");
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < c; ++k) m(i, k) = element_from_json(f, data[i * c + k], at(path + ".data", i * c + k));
    return m;
}

json metadata(const std::string& command, std::uint64_t seed) {
    json out;
    out["tool"] = tool_name;
    out["version"] = tool_version;
    out["command"] = command;
    out["seed"] = seed;
    return out;
}

// ------------------------------------------------------------------ reports

json build_report(const TgrsParams& p) {
    const Field& f = p.field();
    const Matrix G = generator_matrix(p);
    const ParityCheck pc = parity_check(p);
    const Denominator d = denominator(p);
    json out;
    out["params"] = params_to_json(p);
    out["field"] = field_json(f);
    out["u"] = elements_to_json(f, compute_u(p.alpha()));
    out["denominator"] = {{"value", element_to_json(f, d.value)},
                          {"branch", to_string(d.branch)},
                          {"effective_ell", d.effective_ell}};
    out["parity_check"] = {{"branch", to_string(pc.branch)}, {"kernel_fallback", pc.kernel_fallback}};
    out["rank_G"] = rank(G);
    out["rank_H"] = rank(pc.H);
    out["G_Ht_zero"] = (G * pc.H.transpose()).is_zero();
    out["G"] = matrix_to_json(G);
    out["H"] = matrix_to_json(pc.H);
    return out;
}

json classify_report(const TgrsParams& p, Budget budget, int& exit_code) {
    const LinearCode c = build_code(p);
    const ClassificationReport r = classify(c, budget);
    const Bounded<bool> crit = nmds_by_criterion(p, budget);

    json out;
    out["params"] = params_to_json(p);
    out["field"] = field_json(p.field());
    out["budget"] = budget.max_subsets;
    out["n"] = r.n;
    out["k"] = r.k;
    out["d"] = bounded_json(r.d);
    out["d_subsets_visited"] = r.d.subsets_visited;
    out["d_dual"] = bounded_json(r.d_dual);
    out["d_dual_subsets_visited"] = r.d_dual.subsets_visited;
    out["defect"] = r.defect ? json(*r.defect) : json(exceeded_marker);
    out["defect_dual"] = r.defect_dual ? json(*r.defect_dual) : json(exceeded_marker);
    out["mds_class"] = r.mds ? json(r.mds->to_string()) : json(exceeded_marker);
    out["self_orthogonal"] = r.self_orthogonal;
    out["self_dual"] = r.self_dual;
    out["almost_self_dual"] = r.almost_self_dual;
    out["projective"] = r.projective ? json(*r.projective) : json(exceeded_marker);
    out["schur_sq_dim"] = r.schur_sq_dim;
    out["schur_sq_dual_dim"] = r.schur_sq_dual_dim;
    out["non_grs_certificate"] = certificate_json(r.non_grs);

    json by_distance = exceeded_marker;
    if (r.mds) by_distance = r.mds->kind == MdsClass::Kind::NMDS;
    json by_criterion = crit.exceeded() ? json(exceeded_marker) : json(*crit.value);
    json agree = nullptr;
    if (by_distance.is_boolean() && by_criterion.is_boolean()) agree = by_distance == by_criterion;
    out["nmds"] = {{"by_distance", by_distance},
                   {"by_criterion", by_criterion},
                   {"criterion_subsets_visited", crit.subsets_visited},
                   {"agree", agree}};

    const ParityCheck pc = parity_check(p);
    out["parity_check"] = {{"branch", to_string(pc.branch)}, {"kernel_fallback", pc.kernel_fallback}};
    out["G"] = matrix_to_json(c.generator());
    out["H"] = matrix_to_json(c.parity_check());

    const bool exceeded = r.d.exceeded() || r.d_dual.exceeded() || crit.exceeded();
    out["budget_exceeded"] = exceeded;
    if (agree.is_boolean() && !agree.get<bool>())
        exit_code = Mismatch;
    else if (exceeded)
        exit_code = BudgetExceeded;
    else
        exit_code = Ok;
    return out;
}

json schur_report(const TgrsParams& p) {
    const LinearCode c = build_code(p);
    const LinearCode sq = schur_square(c);
    const LinearCode dsq = schur_square(dual(c));
    const std::size_t n = p.n(), k = p.k();
    json out;
    out["params"] = params_to_json(p);
    out["field"] = field_json(p.field());
    out["n"] = n;
    out["k"] = k;
    out["schur_sq_dim"] = sq.dimension();
    out["schur_sq_dual_dim"] = dsq.dimension();
    out["grs_schur_sq_dim"] = std::min(n, 2 * k - 1);
    out["grs_schur_sq_dual_dim"] = 2 * n > 2 * k + 1 ? std::min(n, 2 * n - 2 * k - 1) : 0;
    out["compared"] = 2 * k <= n ? "square" : "dual_square";
    out["non_grs_certificate"] = certificate_json(verify_non_grs(p));
    return out;
}

// ------------------------------------------------------------ reproductions

std::vector<ReferenceFixture> default_reference_fixtures() {
    std::vector<ReferenceFixture> out;

    const std::vector<std::vector<std::int64_t>> etas = {{0, 0, 3, 0}, {0, 0, 3, 3}, {6, 0, 0, 0},
                                                         {6, 0, 0, 3}, {6, 0, 3, 0}, {6, 0, 3, 3}};
    const std::vector<std::vector<std::int64_t>> last_rows = {{4, 4, 2, 4, 2}, {0, 3, 4, 2, 3}, {0, 6, 2, 4, 4},
                                                              {3, 5, 4, 2, 5}, {3, 2, 5, 0, 0}, {6, 1, 0, 5, 1}};
    for (std::size_t i = 0; i < etas.size(); ++i) {
        ReferenceFixture fx;
        fx.name = "nmds-gf7-eta";
        for (auto e : etas[i]) fx.name += "-" + std::to_string(e);
        fx.q = 7;
        fx.k = 3;
        fx.alpha = {1, 2, 3, 4, 5};
        fx.v = {1, 2, 3, 4, 5};
        fx.eta = etas[i];
        fx.G = std::vector<std::vector<std::int64_t>>{{1, 2, 3, 4, 5}, {1, 4, 2, 2, 4}, last_rows[i]};
        fx.d = 2;
        fx.min_d_dual = 3;
        fx.mds_class = "NMDS";
        fx.nmds_criterion = true;
        out.push_back(std::move(fx));
    }

    const std::vector<std::int64_t> alpha37 = {2, 5, 6, 8, 13, 14, 15, 17, 18, 19, 20, 22, 23, 24, 29, 31, 32, 35};
    const std::vector<std::int64_t> v37 = {2, 11, 7, 4, 10, 18, 17, 16, 6, 1, 15, 9, 3, 14, 13, 5, 8, 12};
    const std::vector<std::int64_t> u37 = {4, 10, 12, 16, 26, 28, 30, 34, 36, 1, 3, 7, 9, 11, 21, 25, 27, 33};

    ReferenceFixture k2;
    k2.name = "self-orthogonal-gf37-k2";
    k2.q = 37;
    k2.k = 2;
    k2.alpha = alpha37;
    k2.v = v37;
    k2.eta = {1, 1, 1, 1};
    k2.mu = 36;
    k2.u = u37;
    k2.G = std::vector<std::vector<std::int64_t>>{
        {2, 11, 7, 4, 10, 18, 17, 16, 6, 1, 15, 9, 3, 14, 13, 5, 8, 12},
        {13, 35, 5, 16, 23, 2, 4, 10, 28, 16, 25, 18, 27, 13, 31, 7, 28, 32},
    };
    k2.d = 16;
    k2.mds_class = "NMDS";
    k2.self_orthogonal = true;
    k2.lambda = 1;
    out.push_back(std::move(k2));

    ReferenceFixture k7;
    k7.name = "self-orthogonal-gf37-k7";
    k7.q = 37;
    k7.k = 7;
    k7.alpha = alpha37;
    k7.v = v37;
    k7.eta = {1, 4, 7, 9};
    k7.mu = 36;
    k7.u = u37;
    k7.G = std::vector<std::vector<std::int64_t>>{
        {2, 11, 7, 4, 10, 18, 17, 16, 6, 1, 15, 9, 3, 14, 13, 5, 8, 12},
        {4, 18, 5, 32, 19, 30, 33, 13, 34, 19, 4, 13, 32, 3, 7, 7, 34, 13},
        {8, 16, 30, 34, 25, 13, 14, 36, 20, 28, 6, 27, 33, 35, 18, 32, 15, 11},
        {16, 6, 32, 13, 29, 34, 25, 20, 27, 14, 9, 2, 19, 26, 4, 30, 36, 15},
        {32, 30, 7, 30, 7, 32, 5, 7, 5, 7, 32, 7, 30, 32, 5, 5, 5, 7},
        {27, 2, 5, 18, 17, 4, 1, 8, 16, 22, 11, 6, 24, 28, 34, 7, 12, 23},
        {23, 15, 25, 22, 16, 3, 33, 14, 9, 4, 19, 2, 22, 15, 20, 12, 23, 35},
    };
    k7.d = 10;
    k7.min_d_dual = 3;
    k7.mds_class = "2-MDS";
    k7.self_orthogonal = true;
    k7.projective = true;
    k7.lambda = 1;
    out.push_back(std::move(k7));

    return out;
}

namespace {

class Checker {
public:
    Checker(const std::string& fixture, std::ostream& out, json& log) : fixture_(fixture), out_(out), log_(log) {}

    void check(const std::string& what, const json& expected, const json& computed, const std::string& diff = "") {
        record(what, expected == computed, expected, computed, diff);
    }

    void record(const std::string& what, bool pass, const json& expected, const json& computed,
                const std::string& diff = "") {
        out_ << (pass ? "PASS " : "FAIL ") << fixture_ << " " << what;
        if (!pass) {
            out_ << ": expected " << compact(expected) << ", computed " << compact(computed);
            if (!diff.empty()) out_ << "\n  diff: " << diff;
        }
        out_ << "\n";
        log_.push_back({{"check", what}, {"pass", pass}, {"expected", expected}, {"computed", computed}});
        ok_ = ok_ && pass;
    }

    bool ok() const noexcept { return ok_; }

private:
    std::string fixture_;
    std::ostream& out_;
    json& log_;
    bool ok_ = true;
};

json int_matrix(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).v);
        out.push_back(row);
    }
    return out;
}

std::string matrix_diff(const json& expected, const json& computed) {
    std::ostringstream s;
    if (expected.size() != computed.size()) {
        s << "row count " << expected.size() << " vs " << computed.size();
        return s.str();
    }
    const char* sep = "";
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (expected[i].size() != computed[i].size()) {
            s << sep << "row " << i << " length " << expected[i].size() << " vs " << computed[i].size();
            sep = "; ";
            continue;
        }
        for (std::size_t j = 0; j < expected[i].size(); ++j)
            if (expected[i][j] != computed[i][j]) {
                s << sep << "G[" << i << "][" << j << "] " << expected[i][j] << " -> " << computed[i][j];
                sep = "; ";
            }
    }
    return s.str();
}

json ints_json(const std::vector<Elem>& xs) {
    json out = json::array();
    for (auto x : xs) out.push_back(x.v);
    return out;
}

bool run_fixture(const ReferenceFixture& fx, std::ostream& out, json& log) {
    Checker c(fx.name, out, log);
    const Field f = Field::prime(fx.q);
    std::optional<TgrsParams> p;
    const json shape = {{"q", fx.q}, {"n", fx.alpha.size()}, {"k", fx.k}, {"ell", fx.eta.size() - 1}};
    try {
        std::vector<Elem> alpha, v, eta;
        for (auto x : fx.alpha) alpha.push_back(f.from_int(x));
        for (auto x : fx.v) v.push_back(f.from_int(x));
        for (auto x : fx.eta) eta.push_back(f.from_int(x));
        p.emplace(EvalSet(f, alpha), v, fx.k, eta);
    } catch (const Error& e) {
        c.record("parameters", false, shape, e.what());
        return false;
    }
    c.check("parameters", shape,
            {{"q", p->field().order()}, {"n", p->n()}, {"k", p->k()}, {"ell", p->ell()}});

    if (fx.mu) {
        const auto roots = roots_of_xn_minus(f, p->n(), f.from_int(*fx.mu));
        c.check("alpha = roots of x^n - " + std::to_string(*fx.mu), ints_json(p->alpha().alpha()), ints_json(roots));
    }
    if (fx.u) c.check("u", json(*fx.u), ints_json(compute_u(p->alpha())));
    if (fx.lambda) {
        const auto lambda = square_scaling(p->alpha(), p->v());
        c.check("v^2 = lambda u", *fx.lambda, lambda ? json(lambda->v) : json(nullptr));
    }
    if (fx.G) {
        const json expected = *fx.G;
        const json computed = int_matrix(generator_matrix(*p));
        c.check("G", expected, computed, expected == computed ? "" : matrix_diff(expected, computed));
    }

    const bool need_classify = fx.d || fx.min_d_dual || fx.mds_class || fx.self_orthogonal || fx.projective;
    if (need_classify) {
        const LinearCode code = build_code(*p);
        const ClassificationReport r = classify(code);
        if (fx.d) c.check("d", *fx.d, bounded_json(r.d));
        if (fx.min_d_dual) {
            const json got = bounded_json(r.d_dual);
            c.record("d_dual >= " + std::to_string(*fx.min_d_dual),
                     got.is_number() && got.get<std::size_t>() >= *fx.min_d_dual, *fx.min_d_dual, got);
        }
        if (fx.mds_class) c.check("mds_class", *fx.mds_class, r.mds ? json(r.mds->to_string()) : json(nullptr));
        if (fx.self_orthogonal) c.check("self_orthogonal", *fx.self_orthogonal, r.self_orthogonal);
        if (fx.projective) c.check("projective", *fx.projective, r.projective ? json(*r.projective) : json(nullptr));
    }
    if (fx.nmds_criterion) {
        const Bounded<bool> b = nmds_by_criterion(*p);
        c.check("nmds_by_criterion", *fx.nmds_criterion, b.exceeded() ? json(exceeded_marker) : json(*b.value));
    }
    return c.ok();
}

}  // namespace

int run_reference_examples(const std::vector<ReferenceFixture>& fixtures, std::ostream& out, json* report) {
    bool all = true;
    std::size_t failed = 0;
    json list = json::array();
    for (const auto& fx : fixtures) {
        json log = json::array();
        const bool ok = run_fixture(fx, out, log);
        all = all && ok;
        failed += !ok;
        list.push_back({{"name", fx.name}, {"pass", ok}, {"checks", std::move(log)}});
    }
    out << (all ? "ALL PASS" : "FAILURES") << " (" << fixtures.size() - failed << "/" << fixtures.size()
        << " fixtures)\n";
    if (report) {
        (*report)["fixtures"] = std::move(list);
        (*report)["all_pass"] = all;
    }
    return all ? Ok : Mismatch;
}

// ------------------------------------------------------------------- search

namespace {

std::vector<Elem> eta_at(const Field& f, std::uint64_t index, std::size_t len) {
    std::vector<Elem> eta(len);
    for (std::size_t t = len; t-- > 0; index /= f.order()) eta[t] = f.element(index % f.order());
    return eta;
}

const char* mode_name(SearchMode m) {
    switch (m) {
        case SearchMode::SelfOrthogonal: return "self_orthogonal";
        case SearchMode::Nmds: return "nmds";
        case SearchMode::NonGrs: return "non_grs";
    }
    return "";
}

}  // namespace

json run_search(const SearchOptions& o, int& exit_code) {
    exit_code = Ok;
    if (o.q < 2 || o.q > Field::max_order) throw ParamsError("--q", "field order must be in [2, 65536]");
    Field f = Field::prime(2);
    try {
        f = Field::of_order(o.q);
    } catch (const InvalidArgument& e) {
        throw ParamsError("--q", e.what());
    }
    if (o.n < 2) throw ParamsError("--n", "must be at least 2");
    if (o.k < 2 || o.k > o.n) throw ParamsError("--k", "must satisfy 2 <= k <= n");

    std::uint64_t total = 1;
    for (std::size_t t = 0; t <= o.ell; ++t) {
        if (total > std::numeric_limits<std::uint64_t>::max() / o.q / 2)
            throw ParamsError("--ell", "eta space q^(ell+1) is too large to index");
        total *= o.q;
    }
    --total;
    if (o.start_index < 1 || o.start_index > total)
        throw ParamsError("--start-index", "must lie in [1, " + std::to_string(total) + "]");
    std::uint64_t start = o.start_index - 1;
    if (o.seed != 0) start = (start + std::mt19937_64(o.seed)() % total) % total;

    // Evaluation points for nmds / non_grs.
    std::vector<Elem> alpha, v;
    if (o.base) {
        if (!(o.base->field() == f)) throw ParamsError("--params", "field differs from --q");
        if (o.base->n() != o.n) throw ParamsError("--params", "alpha length differs from --n");
        alpha = o.base->alpha().alpha();
        v = o.base->v();
    } else if (o.mode != SearchMode::SelfOrthogonal) {
        if (o.n > o.q) throw ParamsError("--n", "needs n <= q distinct points");
        const std::uint64_t first = o.n <= o.q - 1 ? 1 : 0;
        for (std::size_t i = 0; i < o.n; ++i) alpha.push_back(f.element(first + i));
        v.assign(o.n, f.one());
    }

    // Admissible mu values for self_orthogonal.
    std::vector<Elem> mus;
    if (o.mode == SearchMode::SelfOrthogonal) {
        if ((o.q - 1) % o.n) throw ParamsError("--n", "self_orthogonal search needs n | q - 1");
        const std::uint32_t m = static_cast<std::uint32_t>((o.q - 1) / o.n);
        if (o.mu) {
            if (*o.mu <= 0 || static_cast<std::uint64_t>(*o.mu) >= o.q) throw ParamsError("--mu", "must lie in [1, q)");
            const Elem mu = f.element(static_cast<std::uint64_t>(*o.mu));
            if (m % f.multiplicative_order(mu)) throw ParamsError("--mu", "ord(mu) must divide (q-1)/n");
            mus.push_back(mu);
        } else {
            for (std::uint32_t x = 1; x < o.q; ++x)
                if (m % f.multiplicative_order(f.element(x)) == 0) mus.push_back(f.element(x));
        }
    }

    json out;
    out["mode"] = mode_name(o.mode);
    out["q"] = o.q;
    out["n"] = o.n;
    out["k"] = o.k;
    out["ell"] = o.ell;
    out["limit"] = o.limit;
    out["start_index"] = o.start_index;
    out["first_index"] = start + 1;
    out["eta_space"] = total;
    if (!alpha.empty()) {
        out["alpha"] = elements_to_json(f, alpha);
        out["v"] = elements_to_json(f, v);
    }
    json hits = json::array();
    std::uint64_t examined = 0, skipped = 0;
    bool exceeded = false;

    for (std::uint64_t step = 0; step < total; ++step) {
        if (o.limit && hits.size() >= o.limit) break;
        const std::uint64_t index = (start + step) % total + 1;
        const std::vector<Elem> eta = eta_at(f, index, o.ell + 1);
        ++examined;
        json base = {{"index", index}, {"eta", elements_to_json(f, eta)}};

        if (o.mode == SearchMode::SelfOrthogonal) {
            for (Elem mu : mus) {
                for (auto which : {SelfOrthogonalCase::SmallK, SelfOrthogonalCase::BoundaryK}) {
                    if (o.limit && hits.size() >= o.limit) break;
                    const std::size_t k = o.k, ell = o.ell, n = o.n;
                    if (which == SelfOrthogonalCase::SmallK && 2 * k + 2 * ell + 2 > n) continue;
                    if (which == SelfOrthogonalCase::BoundaryK && 2 * k + ell + 1 != n) continue;
                    try {
                        const auto so = construct_self_orthogonal(f, n, k, eta, mu, which);
                        json hit = base;
                        hit["mu"] = element_to_json(f, mu);
                        hit["case"] = which == SelfOrthogonalCase::SmallK ? "small_k" : "boundary_k";
                        hit["lambda"] = element_to_json(f, so.lambda);
                        hit["alpha"] = elements_to_json(f, so.params.alpha().alpha());
                        hit["v"] = elements_to_json(f, so.params.v());
                        hit["certificate"] = {{"G_Gt_zero", true}};
                        hits.push_back(std::move(hit));
                    } catch (const InvalidArgument&) {
                        ++skipped;
                    } catch (const NoAdmissibleLambda&) {
                        ++skipped;
                    }
                }
            }
            continue;
        }

        std::optional<TgrsParams> p;
        try {
            p.emplace(EvalSet(f, alpha), v, o.k, eta);
        } catch (const InvalidArgument&) {
            ++skipped;  // rank-deficient long twist
            continue;
        }
        if (o.mode == SearchMode::Nmds) {
            const Bounded<bool> b = nmds_by_criterion(*p, o.budget);
            if (b.exceeded()) {
                exceeded = true;
                base["certificate"] = exceeded_marker;
                out["stopped_at"] = base;
                break;
            }
            if (!*b.value) continue;
            const LinearCode c = build_code(*p);
            json hit = base;
            hit["certificate"] = {{"nmds_by_criterion", true},
                                  {"d", bounded_json(min_distance(c, o.budget))},
                                  {"d_dual", bounded_json(dual_distance(c, o.budget))}};
            hits.push_back(std::move(hit));
        } else {
            const auto cert = verify_non_grs(*p);
            if (!cert) continue;
            json hit = base;
            hit["certificate"] = certificate_json(cert);
            hits.push_back(std::move(hit));
        }
    }

    out["count"] = hits.size();
    out["candidates_examined"] = examined;
    out["candidates_skipped"] = skipped;
    out["budget_exceeded"] = exceeded;
    out["hits"] = std::move(hits);
    if (exceeded) exit_code = BudgetExceeded;
    return out;
}

std::string search_csv(const json& report) {
    std::ostringstream s;
    const std::string mode = report.at("mode");
    auto joined = [](const json& arr) {
        std::string r;
        for (std::size_t i = 0; i < arr.size(); ++i) r += (i ? " " : "") + arr[i].dump();
        return r;
    };
    if (mode == "self_orthogonal")
        s << "index,eta,mu,case,lambda\n";
    else if (mode == "nmds")
        s << "index,eta,d,d_dual\n";
    else
        s << "index,eta,which,computed_dim,grs_dim\n";
    for (const auto& h : report.at("hits")) {
        s << h.at("index").dump() << "," << joined(h.at("eta"));
        const json& c = h.at("certificate");
        if (mode == "self_orthogonal")
            s << "," << h.at("mu").dump() << "," << h.at("case").get<std::string>() << "," << h.at("lambda").dump();
        else if (mode == "nmds")
            s << "," << c.at("d").dump() << "," << c.at("d_dual").dump();
        else
            s << "," << c.at("which").get<std::string>() << "," << c.at("computed_dim").dump() << ","
              << c.at("grs_dim").dump();
        s << "\n";
    }
    return s.str();
}

// ------------------------------------------------------------------- driver

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Twisted generalized Reed-Solomon code toolkit", tool_name};
    app.set_version_flag("--version", tool_version);
    app.require_subcommand(1);

    std::string params_path, out_path, format = "json", mode_str = "nmds";
    std::uint64_t budget = Budget{}.max_subsets, seed = 0, limit = 0, start_index = 1;
    std::uint32_t q = 0;
    std::size_t n = 0, k = 0, ell = 0;
    std::optional<std::int64_t> mu;

    auto* build = app.add_subcommand("build", "Emit G, H and validity facts for a params file");
    auto* cls = app.add_subcommand("classify", "Classify the code of a params file");
    auto* schur = app.add_subcommand("schur", "Schur-square dimensions and non-GRS certificate");
    auto* examples = app.add_subcommand("paper-examples", "Reproduce the built-in reference examples");
    auto* search = app.add_subcommand("search", "Enumerate twist vectors and report hits");

    for (auto* sub : {build, cls, schur}) {
        sub->add_option("--params", params_path, "Params JSON file")->required();
        sub->add_option("--out", out_path, "Report path (default stdout)");
        sub->add_option("--seed", seed, "Seed recorded in the report");
    }
    cls->add_option("--budget", budget, "Subset enumeration ceiling")->capture_default_str();
    examples->add_option("--out", out_path, "Optional JSON report path");
    examples->add_option("--seed", seed, "Seed recorded in the report");

    search->add_option("--q", q, "Field order")->required();
    search->add_option("--n", n, "Code length")->required();
    search->add_option("--k", k, "Dimension")->required();
    search->add_option("--ell", ell, "Twist length minus one")->required();
    search->add_option("--mode", mode_str, "self_orthogonal | nmds | non_grs")
        ->check(CLI::IsMember({"self_orthogonal", "nmds", "non_grs"}))
        ->capture_default_str();
    search->add_option("--limit", limit, "Stop after this many hits (0: no limit)");
    search->add_option("--seed", seed, "Nonzero seed rotates the starting eta");
    search->add_option("--start-index", start_index, "1-based eta index to start from");
    search->add_option("--mu", mu, "Fix mu for self_orthogonal");
    search->add_option("--params", params_path, "Take alpha and v from a params file");
    search->add_option("--budget", budget, "Subset enumeration ceiling")->capture_default_str();
    search->add_option("--out", out_path, "Report path (default stdout)");
    search->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : InputError;
    }

    try {
        int code = Ok;
        json report;
        if (*examples) {
            report = metadata("paper-examples", seed);
            code = run_reference_examples(default_reference_fixtures(), out, out_path.empty() ? nullptr : &report);
            if (!out_path.empty()) write_output(out_path, report.dump(2) + "\n", out);
            return code;
        }
        if (*search) {
            SearchOptions o;
            o.q = q;
            o.n = n;
            o.k = k;
            o.ell = ell;
            o.mode = mode_str == "self_orthogonal" ? SearchMode::SelfOrthogonal
                     : mode_str == "nmds"          ? SearchMode::Nmds
                                                   : SearchMode::NonGrs;
            o.limit = limit;
            o.seed = seed;
            o.start_index = start_index;
            o.mu = mu;
            o.budget.max_subsets = budget;
            if (!params_path.empty()) o.base = load_params(params_path);
            report = metadata("search", seed);
            report.update(run_search(o, code));
            write_output(out_path, format == "csv" ? search_csv(report) : report.dump(2) + "\n", out);
            return code;
        }
        const TgrsParams p = load_params(params_path);
        if (*build) {
            report = metadata("build", seed);
            report.update(build_report(p));
        } else if (*cls) {
            report = metadata("classify", seed);
            report.update(classify_report(p, Budget{budget}, code));
        } else {
            report = metadata("schur", seed);
            report.update(schur_report(p));
        }
        write_output(out_path, report.dump(2) + "\n", out);
        if (code == BudgetExceeded) err << "warning: subset budget exceeded; report is partial\n";
        if (code == Mismatch) err << "error: NMDS verdicts by distance and by criterion disagree\n";
        return code;
    } catch (const ParamsError& e) {
        err << "error: " << e.what() << "\n";
        return InputError;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return InputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return Mismatch;
    }
}

}  // namespace tgrs::cli
