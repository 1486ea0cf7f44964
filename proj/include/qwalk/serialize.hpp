#pragma once

#include "qwalk/search.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>

namespace qwalk {

/// Raised for malformed input documents; the CLI maps it to exit code 2.
struct DocumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Emitted JSON uses ordered_json so field order (and therefore the byte
// stream) is stable across runs and worker counts.
using Json = nlohmann::ordered_json;

/// A wavefunction plus its walk annotations, as carried on the wire.
/// Scalars serialize as ["re", "im"] pairs of canonical rational strings;
/// floating point never appears.
struct StateDocument {
    WaveFunction psi;
    ShiftKind shift = ShiftKind::moving;
    std::optional<Eigenvalue> lambda;
};

inline ShiftKind parse_shift(const std::string& s) {
    if (s == "moving")
        return ShiftKind::moving;
    if (s == "flipflop")
        return ShiftKind::flipflop;
    throw DocumentError("unknown shift '" + s + "' (expected moving|flipflop)");
}

inline Eigenvalue parse_lambda(const std::string& s) {
    if (s == "+1" || s == "1")
        return Eigenvalue::plus_one();
    if (s == "-1")
        return Eigenvalue::minus_one();
    throw DocumentError("unknown lambda '" + s + "' (expected +1|-1)");
}

namespace detail {

inline Json scalar_to_json(const Scalar& z) {
    return Json::array({rational_to_string(z.re()), rational_to_string(z.im())});
}

inline Scalar scalar_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw DocumentError("scalar must be a pair of rational strings");
    try {
        return Scalar(parse_rational(j[0].get<std::string>()),
                      parse_rational(j[1].get<std::string>()));
    } catch (const std::invalid_argument& e) {
        throw DocumentError(e.what());
    }
}

inline Json point_to_json(const LatticePoint& p) {
    Json a = Json::array();
    for (Coord c : p.coords())
        a.push_back(c);
    return a;
}

inline LatticePoint point_from_json(const Json& j, int d) {
    if (!j.is_array() || static_cast<int>(j.size()) != d)
        throw DocumentError("point must be an integer array of length d");
    std::vector<Coord> c;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw DocumentError("point coordinates must be integers");
        c.push_back(v.get<Coord>());
    }
    return LatticePoint(std::move(c));
}

} // namespace detail

inline Json state_to_json(const StateDocument& doc) {
    Json j;
    j["d"] = doc.psi.dim();
    j["shift"] = to_string(doc.shift);
    if (doc.lambda)
        j["lambda"] = to_string(*doc.lambda);
    Json entries = Json::array();
    for (const auto& [x, amp] : doc.psi.entries()) {
        Json e;
        e["x"] = detail::point_to_json(x);
        Json a = Json::array();
        for (const Scalar& z : amp)
            a.push_back(detail::scalar_to_json(z));
        e["amp"] = std::move(a);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

inline StateDocument state_from_json(const Json& j) {
    if (!j.is_object())
        throw DocumentError("state document must be a JSON object");
    if (!j.contains("d") || !j["d"].is_number_integer())
        throw DocumentError("state document needs an integer field 'd'");
    int d = j["d"].get<int>();
    if (d < 1)
        throw DocumentError("d must be >= 1");
    if (!j.contains("shift") || !j["shift"].is_string())
        throw DocumentError("state document needs a string field 'shift'");
    StateDocument doc{WaveFunction(d), parse_shift(j["shift"].get<std::string>()),
                      std::nullopt};
    if (j.contains("lambda")) {
        if (!j["lambda"].is_string())
            throw DocumentError("lambda must be a string");
        doc.lambda = parse_lambda(j["lambda"].get<std::string>());
    }
    if (!j.contains("entries") || !j["entries"].is_array())
        throw DocumentError("state document needs an array field 'entries'");
    WaveFunction::EntryMap m;
    for (const auto& e : j["entries"]) {
        if (!e.is_object() || !e.contains("x") || !e.contains("amp"))
            throw DocumentError("entry needs fields 'x' and 'amp'");
        LatticePoint x = detail::point_from_json(e["x"], d);
        if (!e["amp"].is_array() || static_cast<int>(e["amp"].size()) != 2 * d)
            throw DocumentError("entry 'amp' must hold 2d scalars");
        AmpVector amp;
        for (const auto& s : e["amp"])
            amp.push_back(detail::scalar_from_json(s));
        if (m.count(x))
            throw DocumentError("duplicate entry point");
        m.emplace(std::move(x), std::move(amp));
    }
    doc.psi = WaveFunction(d, std::move(m));
    return doc;
}

inline Json measure_to_json(const Measure& mu) {
    Json j;
    j["d"] = mu.dim();
    Json entries = Json::array();
    for (const auto& [x, v] : mu.entries()) {
        Json e;
        e["x"] = detail::point_to_json(x);
        e["mu"] = rational_to_string(v);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

/// Finite g: Z^2 -> C for the d=2 convolution family.
inline std::map<LatticePoint, Scalar> g_map_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
        throw DocumentError("g document needs an array field 'entries'");
    std::map<LatticePoint, Scalar> g;
    for (const auto& e : j["entries"]) {
        if (!e.is_object() || !e.contains("x") || !e.contains("value"))
            throw DocumentError("g entry needs fields 'x' and 'value'");
        g.emplace(detail::point_from_json(e["x"], 2),
                  detail::scalar_from_json(e["value"]));
    }
    return g;
}

inline Json search_result_to_json(const SearchResult& r) {
    Json j;
    j["d"] = r.d;
    j["shift"] = to_string(r.shift);
    j["lambda"] = to_string(r.lambda);
    j["window_radius"] = r.window_radius;
    j["max_size"] = r.max_size;
    if (r.certified_min)
        j["certified_min"] = *r.certified_min;
    else
        j["certified_min"] = nullptr;
    if (r.found) {
        Json f;
        Json pts = Json::array();
        for (const auto& p : r.found->first.points)
            pts.push_back(detail::point_to_json(p));
        f["support"] = std::move(pts);
        f["witness"] = state_to_json(
            StateDocument{r.found->second, r.shift, r.lambda});
        j["found"] = std::move(f);
    } else {
        j["found"] = nullptr;
    }
    j["candidates_scanned"] = r.candidates_scanned;
    j["sizes_exhausted"] = r.sizes_exhausted;
    j["budget_exhausted"] = r.budget_exhausted;
    return j;
}

} // namespace qwalk
