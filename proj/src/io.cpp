#include "folnerlab/io.hpp"

#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "folnerlab/error.hpp"

namespace folnerlab {

AlgebraPtr shared_algebra(std::string_view tag)
{
    static std::mutex mu;
    static std::map<std::string, AlgebraPtr, std::less<>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(tag);
    if (it != cache.end())
        return it->second;
    AlgebraPtr alg = make_algebra(tag);
    // canonical tags ("group:Z2" and "group:Z^2" may name the same group)
    auto canon = cache.find(alg->tag());
    if (canon != cache.end())
        alg = canon->second;
    cache.emplace(std::string(tag), alg);
    cache.emplace(alg->tag(), alg);
    return alg;
}

Json label_json(const FusionRing& ring, const IrrepLabel& u)
{
    return Json(ring.label_to_json(u));
}

Json set_json(const FusionRing& ring, const IrrepSet& E)
{
    Json out = Json::array();
    for (const auto& u : E)
        out.push_back(label_json(ring, u));
    return out;
}

IrrepSet set_from_json(const FusionRing& ring, const Json& j)
{
    if (!j.is_array())
        throw PreconditionError("label set must be a JSON array, got " + j.dump());
    std::vector<IrrepLabel> out;
    for (const auto& x : j)
        out.push_back(ring.label_from_json(nlohmann::json(x)));
    return IrrepSet(std::move(out));
}

Json rational_json(const mpq_class& q)
{
    return rational_string(q);
}

namespace {

Json scalar_part(const Scalar& c, bool imag)
{
    if (c.mode() == ScalarMode::exact)
        return rational_string(imag ? c.exact().imag() : c.exact().real());
    return imag ? c.floating().imag() : c.floating().real();
}

[[noreturn]] void fail(std::string_view where, const std::string& what)
{
    throw PreconditionError(std::string(where) + ": " + what);
}

void require_keys(const Json& j, std::string_view where, std::initializer_list<std::string_view> allowed,
                  std::initializer_list<std::string_view> required)
{
    if (!j.is_object())
        fail(where, "expected an object");
    for (const auto& [k, v] : j.items()) {
        bool ok = false;
        for (auto a : allowed)
            ok = ok || k == a;
        if (!ok)
            fail(where, "unknown key '" + k + "'");
    }
    for (auto r : required)
        if (!j.contains(std::string(r)))
            fail(where, "missing key '" + std::string(r) + "'");
}

mpq_class exact_part(const Json& j, std::string_view where)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return mpq_class(mpz_class(j.dump()));
    fail(where, "exact coefficients must be \"p/q\" strings, got " + j.dump());
}

double float_part(const Json& j, std::string_view where)
{
    if (j.is_number())
        return j.get<double>();
    if (j.is_string())
        return parse_rational(j.get<std::string>()).get_d();
    fail(where, "expected a number, got " + j.dump());
}

int index_field(const Json& term, const char* key, std::string_view where)
{
    if (!term.contains(key))
        return 1;
    const auto& v = term.at(key);
    if (!v.is_number_integer())
        fail(where, std::string(key) + " must be an integer");
    return v.get<int>();
}

} // namespace

Json scalar_json(const Scalar& c)
{
    return {{"re", scalar_part(c, false)}, {"im", scalar_part(c, true)}};
}

Json element_to_json(const AlgebraElement& a)
{
    const auto& ring = a.algebra().ring();
    Json terms = Json::array();
    for (const auto& [idx, c] : a.terms()) {
        Json t;
        t["irrep"] = label_json(ring, idx.irrep);
        t["row"] = idx.row;
        t["col"] = idx.col;
        t["re"] = scalar_part(c, false);
        t["im"] = scalar_part(c, true);
        terms.push_back(std::move(t));
    }
    Json out;
    out["algebra"] = a.algebra().tag();
    out["mode"] = to_string(a.mode());
    out["terms"] = std::move(terms);
    return out;
}

AlgebraElement element_from_json(const Json& j, std::string_view where)
{
    std::string w(where);
    require_keys(j, w, {"algebra", "mode", "terms"}, {"algebra", "terms"});
    if (!j.at("algebra").is_string())
        fail(w + ".algebra", "must be a string");
    AlgebraPtr alg;
    try {
        alg = shared_algebra(j.at("algebra").get<std::string>());
    } catch (const Error& e) {
        fail(w + ".algebra", e.what());
    }
    const ScalarMode mode = alg->mode();
    if (j.contains("mode")) {
        if (!j.at("mode").is_string())
            fail(w + ".mode", "must be a string");
        ScalarMode given;
        try {
            given = parse_scalar_mode(j.at("mode").get<std::string>());
        } catch (const Error& e) {
            fail(w + ".mode", e.what());
        }
        if (given != mode)
            fail(w + ".mode", "algebra " + alg->tag() + " uses " + to_string(mode) + " scalars");
    }
    const auto& terms = j.at("terms");
    if (!terms.is_array())
        fail(w + ".terms", "must be an array");

    AlgebraElement out(alg);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        std::string tw = w + ".terms[" + std::to_string(i) + "]";
        const auto& t = terms[i];
        require_keys(t, tw, {"irrep", "row", "col", "re", "im"}, {"irrep", "re"});
        try {
            IrrepLabel u = alg->ring().label_from_json(nlohmann::json(t.at("irrep")));
            BasisIndex idx{u, index_field(t, "row", tw), index_field(t, "col", tw)};
            if (!alg->ring().is_valid(u))
                fail(tw + ".irrep", "not an irreducible of " + alg->tag());
            const int nu = alg->ring().dim(u);
            if (idx.row > nu)
                fail(tw + ".row", std::to_string(idx.row) + " exceeds the irreducible's dimension " + std::to_string(nu));
            if (idx.col > nu)
                fail(tw + ".col", std::to_string(idx.col) + " exceeds the irreducible's dimension " + std::to_string(nu));
            Scalar c;
            if (mode == ScalarMode::exact) {
                mpq_class im = t.contains("im") ? exact_part(t.at("im"), tw + ".im") : mpq_class(0);
                c = Scalar(GaussianRational(exact_part(t.at("re"), tw + ".re"), im));
            } else {
                double im = t.contains("im") ? float_part(t.at("im"), tw + ".im") : 0.0;
                c = Scalar(Complex(float_part(t.at("re"), tw + ".re"), im));
            }
            out.add_term(idx, c);
        } catch (const Error& e) {
            std::string msg = e.what();
            if (msg.rfind(tw, 0) == 0)
                throw;
            fail(tw, msg);
        }
    }
    return out;
}

Json matrix_to_json(const MatrixOverPol& T)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < T.n(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < T.n(); ++j)
            row.push_back(element_to_json(T.at(i, j)));
        rows.push_back(std::move(row));
    }
    Json out;
    out["n"] = T.n();
    out["entries"] = std::move(rows);
    return out;
}

MatrixOverPol matrix_from_json(const Json& j)
{
    if (j.is_object() && j.contains("terms"))
        return MatrixOverPol::scalar(element_from_json(j));
    require_keys(j, "matrix", {"n", "entries"}, {"n", "entries"});
    if (!j.at("n").is_number_unsigned() || j.at("n").get<std::size_t>() == 0)
        fail("matrix.n", "must be a positive integer");
    const auto n = j.at("n").get<std::size_t>();
    const auto& rows = j.at("entries");
    if (!rows.is_array() || rows.size() != n)
        fail("matrix.entries", "must be an array of " + std::to_string(n) + " rows");
    std::vector<AlgebraElement> entries;
    for (std::size_t r = 0; r < n; ++r) {
        if (!rows[r].is_array() || rows[r].size() != n)
            fail("matrix.entries[" + std::to_string(r) + "]", "must hold " + std::to_string(n) + " elements");
        for (std::size_t c = 0; c < n; ++c)
            entries.push_back(
                element_from_json(rows[r][c], "matrix.entries[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
    }
    return MatrixOverPol(n, std::move(entries));
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw PreconditionError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw PreconditionError(path + ": " + e.what());
    }
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

// ---- reports ------------------------------------------------------------------

Json to_json(const DimensionEstimate& e, const FusionRing& ring)
{
    Json out;
    out["kind"] = "dimension_estimate";
    out["lower"] = rational_json(e.lower);
    out["upper"] = rational_json(e.upper);
    out["lower_decimal"] = e.lower.get_d();
    out["upper_decimal"] = e.upper.get_d();
    out["n"] = e.n;
    out["side"] = to_string(e.side);
    out["mode"] = to_string(e.mode);
    out["window_weight"] = e.window_weight;
    out["boundary_weight"] = e.boundary_weight;
    out["boundary_ratio"] = rational_json(e.boundary_ratio);
    out["nullity"] = e.nullity;
    out["rank"] = e.rank;
    out["domain_dim"] = e.domain_dim;
    out["codomain_dim"] = e.codomain_dim;
    out["empty_interior"] = e.empty_interior;
    out["rank_sum_ok"] = e.rank_sum_ok;
    out["support"] = set_json(ring, e.support);
    out["window"] = set_json(ring, e.window);
    return out;
}

Json to_json(const ProfileRow& r)
{
    Json out;
    out["radius"] = r.radius;
    out["weight"] = r.weight;
    out["boundary"] = r.boundary;
    out["symmetric_boundary"] = r.symmetric_boundary;
    out["ratio"] = rational_json(r.ratio);
    out["ratio_decimal"] = r.ratio.get_d();
    return out;
}

Json to_json(const FolnerResult& r, const FusionRing& ring)
{
    Json out;
    if (const auto* c = std::get_if<FolnerCertificate>(&r)) {
        out["kind"] = "folner_certificate";
        out["ring"] = ring.tag();
        out["S"] = set_json(ring, c->S);
        out["epsilon"] = rational_json(c->epsilon);
        out["strategy"] = c->strategy;
        out["radius"] = c->radius;
        out["boundary_weight"] = c->boundary_weight;
        out["window_weight"] = c->window_weight;
        out["verified"] = verify_folner_certificate(ring, *c);
        out["F"] = set_json(ring, c->F);
        return out;
    }
    const auto& e = std::get<ExhaustionReport>(r);
    out["kind"] = "folner_exhaustion";
    out["ring"] = ring.tag();
    out["S"] = set_json(ring, e.S);
    out["epsilon"] = rational_json(e.epsilon);
    out["strategy"] = e.strategy;
    out["max_radius"] = e.max_radius;
    Json rows = Json::array();
    for (const auto& row : e.profile)
        rows.push_back(to_json(row));
    out["profile"] = std::move(rows);
    return out;
}

Json to_json(const std::vector<ProfileRow>& rows, const IrrepSet& S, const FusionRing& ring)
{
    Json out;
    out["kind"] = "isoperimetric_profile";
    out["ring"] = ring.tag();
    out["S"] = set_json(ring, S);
    Json rs = Json::array();
    for (const auto& row : rows)
        rs.push_back(to_json(row));
    out["rows"] = std::move(rs);
    return out;
}

Json to_json(const ZeroDivisorCertificate& c)
{
    const auto& ring = c.a.algebra().ring();
    Json out;
    out["kind"] = "zero_divisor_certificate";
    out["side"] = to_string(c.side);
    out["radius"] = c.radius;
    out["a"] = element_to_json(c.a);
    out["b"] = element_to_json(c.b);
    AlgebraElement p = c.side == Side::left ? c.a * c.b : c.b * c.a;
    Json v;
    v["product"] = c.side == Side::left ? "a*b" : "b*a";
    v["product_terms"] = p.terms().size();
    v["product_norm"] = p.coefficient_norm();
    v["verified"] = verify_zero_divisor(c);
    out["verification"] = std::move(v);
    out["window"] = set_json(ring, c.window);
    return out;
}

Json to_json(const ZeroDivisorResult& r)
{
    if (const auto* c = std::get_if<ZeroDivisorCertificate>(&r))
        return to_json(*c);
    const auto& n = std::get<NotFoundReport>(r);
    Json out;
    out["kind"] = "zero_divisor_not_found";
    out["side"] = to_string(n.side);
    out["max_radius"] = n.max_radius;
    out["a"] = element_to_json(n.a);
    Json seq = Json::array();
    for (const auto& p : n.sequence) {
        Json row;
        row["radius"] = p.radius;
        row["window_weight"] = p.estimate.window_weight;
        row["nullity"] = p.estimate.nullity;
        row["lower"] = rational_json(p.estimate.lower);
        row["upper"] = rational_json(p.estimate.upper);
        seq.push_back(std::move(row));
    }
    out["sequence"] = std::move(seq);
    return out;
}

Json to_json(const OreResult& r)
{
    if (const auto* c = std::get_if<ZeroDivisorCertificate>(&r))
        return to_json(*c);
    Json out;
    if (const auto* p = std::get_if<OrePair>(&r)) {
        const auto& ring = p->a.algebra().ring();
        out["kind"] = "ore_pair";
        out["radius"] = p->radius;
        out["window_weight"] = p->window_weight;
        out["boundary_weight"] = p->boundary_weight;
        out["rows"] = p->rows;
        out["cols"] = p->cols;
        out["a"] = element_to_json(p->a);
        out["s"] = element_to_json(p->s);
        out["t"] = element_to_json(p->t);
        out["b"] = element_to_json(p->b);
        AlgebraElement residual = p->a * p->t - p->s * p->b;
        Json v;
        v["residual"] = "a*t - s*b";
        v["residual_terms"] = residual.terms().size();
        v["residual_norm"] = residual.coefficient_norm();
        v["verified"] = verify_ore_pair(*p);
        out["verification"] = std::move(v);
        out["window"] = set_json(ring, p->window);
        return out;
    }
    const auto& e = std::get<OreExhaustion>(r);
    out["kind"] = "ore_exhaustion";
    out["max_radius"] = e.max_radius;
    out["a"] = element_to_json(e.a);
    out["s"] = element_to_json(e.s);
    Json tried = Json::array();
    for (const auto& t : e.tried)
        tried.push_back({{"radius", t[0]}, {"window_weight", t[1]}, {"boundary_weight", t[2]}});
    out["tried"] = std::move(tried);
    return out;
}

Json to_json(const HaarReport& r, const FusionRing& ring)
{
    Json out;
    out["kind"] = "haar_approximation";
    out["source_value"] = scalar_json(r.source_value);
    out["omega"] = set_json(ring, r.omega);
    Json levels = Json::array();
    for (const auto& l : r.levels)
        levels.push_back({{"modulus", l.modulus}, {"omega_injective", l.omega_injective}, {"value", scalar_json(l.value)}});
    out["levels"] = std::move(levels);
    out["first_injective"] = r.first_injective ? Json(*r.first_injective) : Json();
    out["eventual_equality"] = r.eventual_equality;
    return out;
}

Json to_json(const TowerReport& r, const FusionRing& ring, const HaarReport* haar)
{
    Json out;
    out["kind"] = "tower_report";
    out["ring"] = ring.tag();
    out["source"] = to_json(r.source, ring);
    out["transport_limit"] = rational_json(r.transport_limit);
    out["composites_commute"] = r.composites_commute;
    out["first_injective"] = r.first_injective ? Json(*r.first_injective) : Json();
    out["identities_hold"] = r.identities_hold;
    Json levels = Json::array();
    for (const auto& l : r.levels) {
        Json j;
        j["modulus"] = l.modulus;
        j["target"] = l.target;
        j["omega_injective"] = l.omega_injective;
        j["quotient_dim"] = l.quotient_dim ? rational_json(*l.quotient_dim) : Json();
        if (l.omega_injective && !l.error) {
            j["support_pushforward"] = l.support_pushforward;
            j["boundary_pushforward"] = l.boundary_pushforward;
            j["weights_preserved"] = l.weights_preserved;
            j["transport_gap"] = rational_json(l.transport_gap);
            j["transport_bound"] = l.transport_bound;
        }
        if (l.error)
            j["error"] = *l.error;
        levels.push_back(std::move(j));
    }
    out["levels"] = std::move(levels);
    if (haar)
        out["haar"] = to_json(*haar, ring);
    out["omega"] = set_json(ring, r.omega);
    return out;
}

Json to_json(const AxiomReport& r, const FusionRing& ring)
{
    Json out;
    out["kind"] = "axiom_report";
    out["ring"] = ring.tag();
    out["labels_checked"] = r.labels_checked;
    out["pairs_checked"] = r.pairs_checked;
    out["triples_checked"] = r.triples_checked;
    out["ok"] = r.ok();
    out["failures"] = r.failures;
    return out;
}

} // namespace folnerlab
