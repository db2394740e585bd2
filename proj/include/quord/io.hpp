#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "quord/halfspace.hpp"
#include "quord/relation.hpp"

namespace quord {

/// A relation together with the names of its elements; element i is
/// labels[i].
struct LabeledRelation {
    std::vector<std::string> labels;
    Relation relation;
};

inline std::vector<std::string> numeric_labels(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(std::to_string(i));
    }
    return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (!s.empty() && blank(s.front())) {
        s.remove_prefix(1);
    }
    while (!s.empty() && blank(s.back())) {
        s.remove_suffix(1);
    }
    return s;
}

inline std::vector<std::string> split_words(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string w;
    while (in >> w) {
        out.push_back(w);
    }
    return out;
}

class NameTable {
public:
    NameTable(const std::vector<std::string>& labels, const std::string& where) {
        for (std::size_t i = 0; i < labels.size(); ++i) {
            const std::string& name = labels[i];
            if (name.empty() || name.find_first_of(" \t#") != std::string::npos) {
                throw InputError(where + ": invalid element name '" + name + "'");
            }
            if (!ids_.emplace(name, i).second) {
                throw InputError(where + ": duplicate element name '" + name + "'");
            }
        }
    }

    Element id(const std::string& name, const std::string& where) const {
        auto it = ids_.find(name);
        if (it == ids_.end()) {
            throw InputError(where + ": unknown element '" + name + "'");
        }
        return it->second;
    }

private:
    std::map<std::string, Element> ids_;
};

inline LabeledRelation parse_json_relation(std::string_view text, const std::string& source) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(source + ": malformed JSON: " + e.what());
    }
    try {
        if (!doc.is_object() || !doc.contains("elements")) {
            throw InputError(source + ": JSON relation needs an \"elements\" field");
        }
        std::vector<std::string> labels;
        const auto& elements = doc.at("elements");
        if (elements.is_number_unsigned()) {
            labels = numeric_labels(elements.get<std::size_t>());
        } else {
            for (const auto& e : elements) {
                labels.push_back(e.is_string() ? e.get<std::string>() : e.dump());
            }
        }
        if (labels.size() > max_elements) {
            throw ResourceError(source + ": " + std::to_string(labels.size()) + " elements exceed the limit");
        }
        NameTable names(labels, source);
        bool reflexive = doc.value("reflexive_implicit", true);
        std::vector<Pair> pairs;
        for (const auto& p : doc.value("pairs", nlohmann::json::array())) {
            if (!p.is_array() || p.size() != 2) {
                throw InputError(source + ": every pair must be a two-element array");
            }
            auto name = [](const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
            pairs.emplace_back(names.id(name(p[0]), source), names.id(name(p[1]), source));
        }
        return LabeledRelation{labels, Relation::from_pairs(labels.size(), pairs, reflexive)};
    } catch (const nlohmann::json::exception& e) {
        throw InputError(source + ": unexpected JSON shape: " + e.what());
    }
}

}  // namespace detail

/// Parses the text format or, when the first non-blank character is '{',
/// the JSON format {"elements": [...], "pairs": [[x, y], ...],
/// "reflexive_implicit": bool}.
///
/// Text format: a header line `elements: a b c` or `n: K`, an optional
/// `strict: true` line, then one `x y` line per pair. `#` starts a comment.
/// Reflexive pairs are added unless strict.
inline LabeledRelation parse_relation(std::string_view text, const std::string& source = "input") {
    if (auto start = text.find_first_not_of(" \t\r\n"); start != std::string_view::npos && text[start] == '{') {
        return detail::parse_json_relation(text, source);
    }

    std::vector<std::string> labels;
    bool have_header = false;
    bool strict = false;
    bool seen_pair = false;
    struct NamedPair {
        std::string x;
        std::string y;
        std::string where;
    };
    std::vector<NamedPair> named;

    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string where = source + ":" + std::to_string(line_no);
        std::string_view content = line;
        if (auto hash = content.find('#'); hash != std::string_view::npos) {
            content = content.substr(0, hash);
        }
        content = detail::trim(content);
        if (content.empty()) {
            continue;
        }
        if (!have_header) {
            if (content.starts_with("elements:")) {
                labels = detail::split_words(content.substr(9));
            } else if (content.starts_with("n:")) {
                auto words = detail::split_words(content.substr(2));
                std::size_t k = 0;
                std::size_t used = 0;
                try {
                    k = words.size() == 1 ? std::stoul(words[0], &used) : 0;
                } catch (const std::exception&) {
                    used = 0;
                }
                if (words.size() != 1 || used != words[0].size()) {
                    throw InputError(where + ": expected `n: K` with a non-negative integer K");
                }
                if (k > max_elements) {
                    throw ResourceError(where + ": " + std::to_string(k) + " elements exceed the limit of " +
                                        std::to_string(max_elements));
                }
                labels = numeric_labels(k);
            } else {
                throw InputError(where + ": expected a header `elements: ...` or `n: K`");
            }
            if (labels.size() > max_elements) {
                throw ResourceError(where + ": " + std::to_string(labels.size()) + " elements exceed the limit of " +
                                    std::to_string(max_elements));
            }
            have_header = true;
            continue;
        }
        if (content.starts_with("strict:")) {
            if (seen_pair) {
                throw InputError(where + ": `strict:` must come before the pairs");
            }
            auto value = detail::trim(content.substr(7));
            if (value != "true" && value != "false") {
                throw InputError(where + ": `strict:` takes true or false");
            }
            strict = value == "true";
            continue;
        }
        auto words = detail::split_words(content);
        if (words.size() != 2) {
            throw InputError(where + ": expected a pair `x y`");
        }
        seen_pair = true;
        named.push_back({words[0], words[1], where});
    }
    if (!have_header) {
        throw InputError(source + ": empty relation file");
    }
    detail::NameTable names(labels, source);
    std::vector<Pair> pairs;
    for (const auto& p : named) {
        pairs.emplace_back(names.id(p.x, p.where), names.id(p.y, p.where));
    }
    return LabeledRelation{labels, Relation::from_pairs(labels.size(), pairs, !strict)};
}

inline LabeledRelation read_relation_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError(path + ": cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_relation(buf.str(), path);
}

/// Canonical text form. Reflexive relations omit the diagonal; anything
/// else is written with `strict: true` and every pair.
inline std::string format_relation(const LabeledRelation& r) {
    std::string out = "elements:";
    for (const auto& l : r.labels) {
        out += " " + l;
    }
    out += "\n";
    bool reflexive = !find_irreflexive(r.relation);
    if (!reflexive) {
        out += "strict: true\n";
    }
    for (auto [x, y] : r.relation.pairs()) {
        if (reflexive && x == y) {
            continue;
        }
        out += r.labels[x] + " " + r.labels[y] + "\n";
    }
    return out;
}

/// Comma-separated names listing every element once, least first.
inline LinearOrder parse_permutation(std::string_view text, const std::vector<std::string>& labels) {
    detail::NameTable names(labels, "permutation");
    std::vector<Element> seq;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        std::string name(detail::trim(item));
        seq.push_back(names.id(name, "permutation"));
    }
    std::vector<Element> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() != labels.size() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InputError("permutation must list each of the " + std::to_string(labels.size()) +
                         " elements exactly once");
    }
    return LinearOrder::from_sequence(seq);
}

/// A permutation of quotient classes written with element names: each
/// class is placed where its first listed member appears. Every class must
/// be reached.
inline LinearOrder parse_class_permutation(std::string_view text, const std::vector<std::string>& labels,
                                           const QuotientMap& quotient) {
    detail::NameTable names(labels, "permutation");
    std::vector<Element> seq;
    std::vector<bool> placed(quotient.class_count(), false);
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        std::string name(detail::trim(item));
        std::size_t c = quotient.class_of(names.id(name, "permutation"));
        if (!placed[c]) {
            placed[c] = true;
            seq.push_back(c);
        }
    }
    if (seq.size() != quotient.class_count()) {
        throw InputError("permutation must reach each of the " + std::to_string(quotient.class_count()) +
                         " classes");
    }
    return LinearOrder::from_sequence(seq);
}

// ---------------------------------------------------------------------------
// Report formatting.

inline std::string format_set(ElementSet s, const std::vector<std::string>& labels) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](Element e) {
        out += (first ? "" : ",") + labels.at(e);
        first = false;
    });
    return out + "}";
}

/// Class names for a quotient: `{a,b}` per class.
inline std::vector<std::string> class_labels(const QuotientMap& q, const std::vector<std::string>& labels) {
    std::vector<std::string> out;
    for (const auto& c : q.classes()) {
        out.push_back(format_set(c, labels));
    }
    return out;
}

/// `[{⊥} < {a,b}∅ < {⊤}]`: boxes smallest first; boxes of two or more
/// elements carry ∅ (empty) or ■ (full).
inline std::string format_boxes(const BoxDecomposition& d, const std::vector<std::string>& labels) {
    std::string out = "[";
    for (std::size_t i = 0; i < d.boxes().size(); ++i) {
        const Box& b = d.boxes()[i];
        out += (i ? " < " : "") + format_set(b.members, labels);
        if (b.members.size() > 1) {
            out += b.kind == BoxKind::full ? "■" : "∅";
        }
    }
    return out + "]";
}

/// `a < b < c` for a linear order.
inline std::string format_chain(const LinearOrder& l, const std::vector<std::string>& labels) {
    std::string out;
    for (Element e : l.sequence()) {
        out += (out.empty() ? "" : " < ") + labels.at(e);
    }
    return out;
}

/// `(a,b) ids (0,1)`.
inline std::string format_named_pair(Pair p, const std::vector<std::string>& labels) {
    return "(" + labels.at(p.first) + "," + labels.at(p.second) + ") ids " + format_pair(p);
}

}  // namespace quord
