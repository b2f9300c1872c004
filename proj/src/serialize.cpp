#include "mz/serialize.hpp"

#include <cmath>
#include <string>

namespace mz {

Json to_json(const IntPoly& f) {
    Json j;
    j["variable"] = std::string(1, variable_name(f.variable()));
    Json coeffs = Json::array();
    for (const BigInt& c : f.coeffs()) coeffs.push_back(c.to_decimal());
    j["coefficients"] = std::move(coeffs);
    return j;
}

IntPoly intpoly_from_json(const Json& j) {
    const std::string var = j.at("variable").get<std::string>();
    if (var.size() != 1) throw std::invalid_argument("polynomial JSON: bad variable tag");
    std::vector<BigInt> coeffs;
    for (const auto& c : j.at("coefficients")) coeffs.emplace_back(c.get<std::string>());
    return IntPoly(variable_from_name(var[0]), std::move(coeffs));
}

Json to_json(const NewtonPolygon& np) {
    Json j;
    j["prime"] = np.prime();
    j["zero_prefix"] = np.zero_prefix();
    Json verts = Json::array();
    for (const PolygonPoint& v : np.vertices()) verts.push_back(Json::array({v.index, v.val}));
    j["vertices"] = std::move(verts);
    Json segs = Json::array();
    for (const Segment& s : segments(np)) {
        Json seg;
        seg["slope"] = s.slope.num().to_decimal() + "/" + s.slope.den().to_decimal();
        seg["hlen"] = s.hlen;
        segs.push_back(std::move(seg));
    }
    j["segments"] = std::move(segs);
    return j;
}

Json to_json(const MisiurewiczBundle& bundle) {
    Json j;
    j["d"] = bundle.params.d;
    j["m"] = bundle.params.m;
    j["variable"] = std::string(1, variable_name(bundle.variable));
    j["misiurewicz"] = to_json(bundle.misiurewicz);
    j["pre_misiurewicz"] = to_json(bundle.pre_misiurewicz);
    j["q_factor"] = to_json(bundle.q_factor);
    j["sigma"] = to_json(bundle.sigma);
    j["tau"] = to_json(bundle.tau);
    if (bundle.F) j["F"] = to_json(*bundle.F);
    return j;
}

Json to_json(const Certificate& cert) {
    Json j;
    j["verdict"] = to_string(cert.verdict);
    j["method"] = cert.method ? Json(to_string(*cert.method)) : Json(nullptr);
    j["prime"] = cert.prime ? Json(*cert.prime) : Json(nullptr);
    j["variable"] = std::string(1, variable_name(cert.variable));
    j["degree"] = cert.degree ? Json(*cert.degree) : Json(nullptr);
    j["content"] = cert.content.to_decimal();
    j["polygon"] = cert.polygon ? to_json(*cert.polygon) : Json(nullptr);
    Json excluded = Json::array();
    for (const RootCandidate& c : cert.excluded_roots) {
        Json e;
        e["value"] = c.value.to_string();
        e["source"] = c.source == RootCandidate::Source::FamilyLinearForm ? "family-linear-form"
                                                                         : "rational-root-theorem";
        excluded.push_back(std::move(e));
    }
    j["excluded_roots"] = std::move(excluded);
    j["rational_root"] = cert.rational_root ? Json(cert.rational_root->to_string()) : Json(nullptr);
    Json attempts = Json::array();
    for (const PolygonAttempt& a : cert.polygon_attempts) {
        Json at;
        at["prime"] = a.prime;
        at["variable"] = std::string(1, variable_name(a.variable));
        at["eisenstein"] = a.eisenstein;
        at["factor_degree_candidates"] = a.candidates;
        at["polygon"] = to_json(a.polygon);
        attempts.push_back(std::move(at));
    }
    j["polygon_attempts"] = std::move(attempts);
    j["primes_tried"] = cert.primes_tried;
    j["note"] = cert.note;
    return j;
}

namespace {

Json complex_json(const Complex& z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return Json("infinity");
    Json j;
    j["re"] = z.real();
    j["im"] = z.imag();
    return j;
}

} // namespace

Json to_json(const OrbitReport& rep) {
    Json j;
    j["status"] = to_string(rep.status);
    j["parameter"] = complex_json(rep.parameter);
    j["root_residual"] = rep.root_residual;
    j["tail"] = rep.tail;
    Json orbit = Json::array();
    for (const Complex& z : rep.orbit) orbit.push_back(complex_json(z));
    j["orbit"] = std::move(orbit);
    j["landing"] = rep.landing ? complex_json(*rep.landing) : Json(nullptr);
    j["landing_class"] = rep.landing ? Json(rep.landing_is_zero ? "zero-fixed" : "nonzero-fixed")
                                     : Json(nullptr);
    j["equivariance_residual"] = rep.equivariance_residual;
    j["note"] = rep.note;
    return j;
}

} // namespace mz
