#include "bcflab/io.hpp"

#include <algorithm>

#include "bcflab/error.hpp"

namespace bcflab::io {

namespace {

struct NamedTerm {
    std::vector<std::pair<std::string, std::uint32_t>> e;  // name-sorted
    std::uint32_t deg;
    const Rat* c;
};

}  // namespace

ordered_json poly_to_json(const MPoly& p) {
    auto& vt = VarTable::instance();
    std::vector<NamedTerm> named;
    named.reserve(p.term_count());
    for (auto& [m, c] : p.terms()) {
        NamedTerm t;
        t.deg = m.degree();
        t.c = &c;
        for (auto& [v, x] : m.e) t.e.emplace_back(vt.name(v), x);
        std::sort(t.e.begin(), t.e.end());
        named.push_back(std::move(t));
    }
    std::sort(named.begin(), named.end(), [](const NamedTerm& a, const NamedTerm& b) {
        if (a.deg != b.deg) return a.deg > b.deg;
        return a.e > b.e;
    });
    ordered_json terms = ordered_json::array();
    for (auto& t : named) {
        ordered_json e = ordered_json::object();
        for (auto& [n, x] : t.e) e[n] = x;
        terms.push_back(ordered_json{{"c", rat_to_string(*t.c)}, {"e", std::move(e)}});
    }
    return ordered_json{{"terms", std::move(terms)}};
}

MPoly poly_from_json(const ordered_json& j) {
    MPoly acc;
    for (auto& t : j.at("terms")) {
        Rat c = rat_from_string(t.at("c").get<std::string>());
        MPoly mono = MPoly::constant(c);
        if (t.contains("e"))
            for (auto& [name, exp] : t.at("e").items())
                mono *= MPoly::var(name, exp.get<std::uint32_t>());
        acc += mono;
    }
    return acc;
}

ordered_json triangle_to_json(const bcf::Triangle& t) {
    ordered_json rows = ordered_json::array();
    for (auto& row : t.rows) {
        ordered_json r = ordered_json::array();
        for (auto& p : row) r.push_back(poly_to_json(p));
        rows.push_back(std::move(r));
    }
    return ordered_json{{"family", bcf::family_name(t.family)},
                        {"m", t.m},
                        {"N", t.N},
                        {"rows", std::move(rows)}};
}

ordered_json matrix_to_json(const PolyMatrix& m) {
    ordered_json entries = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(poly_to_json(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    return ordered_json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ordered_json tp_report_to_json(const totalpos::TPReport& rep) {
    ordered_json j{{"verdict", rep.violated ? "violated" : "tp"},
                   {"order", rep.order},
                   {"checked", rep.checked}};
    if (rep.witness) {
        j["witness"] = ordered_json{{"rows", rep.witness->rows},
                                    {"cols", rep.witness->cols},
                                    {"minor", poly_to_json(rep.witness->minor)}};
    }
    return j;
}

}  // namespace bcflab::io
