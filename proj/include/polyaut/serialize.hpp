#ifndef POLYAUT_SERIALIZE_HPP
#define POLYAUT_SERIALIZE_HPP

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

#include "polyaut/objects.hpp"
#include "polyaut/verify.hpp"

namespace polyaut {

// ---------------------------------------------------------------------------
// Canonical emission.  Text and structured forms are pure functions of the
// value, so identical inputs give byte-identical output across runs.
// ---------------------------------------------------------------------------

template <class K>
std::string emit_text(const Polynomial<K>& p) {
    return p.str();
}

/// One line per generator of the source ring, "x1 -> <image>".
template <class K>
std::string emit_text(const Endomorphism<K>& e) {
    std::string out;
    int n = e.source() == Ring::three ? 3 : 6;
    for (int v = 0; v < n; ++v) {
        out += var_name(v);
        out += " -> ";
        out += e.image(v).str();
        out += "\n";
    }
    return out;
}

inline std::string emit_text(const Report& r) { return report_line(r) + "\n"; }

template <class K>
nlohmann::ordered_json emit_structured(const Polynomial<K>& p) {
    nlohmann::ordered_json j;
    j["ring"] = p.ring() == Ring::three ? "three" : "six";
    j["terms"] = p.term_count();
    j["text"] = p.str();
    return j;
}

template <class K>
nlohmann::ordered_json emit_structured(const Endomorphism<K>& e) {
    nlohmann::ordered_json j;
    j["source"] = e.source() == Ring::three ? "three" : "six";
    j["target"] = e.target() == Ring::three ? "three" : "six";
    nlohmann::ordered_json images = nlohmann::ordered_json::object();
    int n = e.source() == Ring::three ? 3 : 6;
    for (int v = 0; v < n; ++v) images[var_name(v)] = e.image(v).str();
    j["images"] = images;
    return j;
}

inline nlohmann::ordered_json emit_structured(const Report& r) {
    return report_json(r);
}

// ---------------------------------------------------------------------------
// Named object registry for the command line.  Every entry is deterministic;
// the triangular exponential is emitted symbolically in u.
// ---------------------------------------------------------------------------

struct NamedObject {
    std::string text;
    nlohmann::ordered_json structured;
};

inline std::map<std::string, NamedObject> named_objects() {
    using PF = ParamFraction;
    std::map<std::string, NamedObject> out;
    auto add_poly = [&](const std::string& name, const auto& p) {
        out[name] = {emit_text(p) + "\n", emit_structured(p)};
    };
    auto add_endo = [&](const std::string& name, const auto& e) {
        out[name] = {emit_text(e), emit_structured(e)};
    };
    add_poly("f", base_f<Rational>());
    add_poly("r", base_r<Rational>());
    add_poly("g", base_g<Rational>());
    add_poly("t_r", tr_expression<Rational>());
    add_poly("t_g", tg_expression<Rational>());
    auto u = PF::sym(Sym::u);
    auto pp = phi_prime<PF>(u);
    add_poly("exp.x1", pp.image(X1));
    add_poly("exp.x2", pp.image(X2));
    add_poly("exp.x3", pp.image(X3));
    add_poly("exp.tr", pp.image(TR));
    add_endo("exp", pp);
    add_endo("proj", pi_map<Rational>());
    auto d = delta<PF>();
    Endomorphism<PF> dmap(Ring::three, Ring::three);
    for (int v = 0; v < 3; ++v) dmap.set_image(v, d.image(v));
    add_endo("derivation", dmap);
    return out;
}

inline std::vector<std::string> named_object_ids() {
    std::vector<std::string> ids;
    for (const auto& [k, v] : named_objects()) ids.push_back(k);
    return ids;
}

}  // namespace polyaut

#endif
