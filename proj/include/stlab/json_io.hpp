#pragma once

/** @file
 * JSON form of Steinberg words:
 *   {"system": "A3", "ring": <descriptor>, "letters": [{"root": [1,-1,0,0], "arg": <payload>, "sign": 1}, ...]}
 * "root" may also be a string such as "e1-e2".  A bare letter list is read with
 * the system and ring supplied by the caller.
 */

#include <fstream>
#include <sstream>
#include <string>

#include "stlab/representation.hpp"
#include "stlab/ring_json.hpp"
#include "stlab/word.hpp"

namespace stlab {

inline json letter_to_json(const RootSystem& sys, const Letter& l) {
    return {{"root", sys.coords(l.root)}, {"arg", payload_to_json(l.arg)}, {"sign", l.sign}};
}

inline json word_to_json(const SteinbergWord& w) {
    json ls = json::array();
    for (const auto& l : w.letters()) ls.push_back(letter_to_json(*w.system(), l));
    return {{"system", w.system()->name()}, {"ring", ring_to_json(w.ring())}, {"letters", ls}};
}

inline RootIndex root_from_json(const RootSystem& sys, const json& j) {
    if (j.is_string()) return sys.parse_root(j.get<std::string>());
    if (j.is_array()) return sys.index_of(j.get<std::vector<int>>());
    throw ParseError("root must be a coordinate list or a string like \"e1-e2\"");
}

inline SteinbergWord letters_from_json(const SystemPtr& sys, const Ring& R, const json& list) {
    if (!list.is_array()) throw ParseError("letters must be a JSON array");
    std::vector<Letter> ls;
    for (const auto& e : list) {
        if (!e.is_object() || !e.contains("root") || !e.contains("arg")) throw ParseError("letter needs \"root\" and \"arg\"");
        int sign = e.value("sign", 1);
        if (sign != 1 && sign != -1) throw ParseError("sign must be 1 or -1");
        ls.push_back({root_from_json(*sys, e["root"]), payload_from_json(R, e["arg"]), sign});
    }
    return SteinbergWord::from_letters(sys, R, ls);
}

/// Reads a word object; system and ring fall back to the given defaults.
inline SteinbergWord word_from_json(const json& j, SystemPtr sys = nullptr, std::optional<Ring> R = std::nullopt) {
    if (j.is_array()) {
        if (!sys || !R) throw ParseError("a bare letter list needs a system and a ring");
        return letters_from_json(sys, *R, j);
    }
    if (!j.is_object()) throw ParseError("word must be an object or a letter list");
    if (j.contains("system")) sys = RootSystem::parse(j["system"].get<std::string>());
    if (j.contains("ring")) R = ring_from_json(j["ring"]);
    if (!sys) throw ParseError("word has no \"system\"");
    if (!R) throw ParseError("word has no \"ring\"");
    return letters_from_json(sys, *R, j.value("letters", json::array()));
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

template <class T>
json matrix_to_json(const Matrix<T>& m) {
    json rows = json::array();
    for (int i = 0; i < m.n; ++i) {
        json row = json::array();
        for (int k = 0; k < m.n; ++k) row.push_back(payload_to_json(m(i, k)));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace stlab
