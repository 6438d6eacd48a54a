#pragma once

// Plain tables rendered as CSV or JSON. Cells are strings, so large
// integers pass through as decimal text.

#include "hdiff/abc.hpp"
#include "hdiff/families.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace hdiff {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

inline std::string join(const std::vector<std::string>& parts, char sep = ';') {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

inline std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

inline std::string to_csv(const Table& t) {
    std::string out;
    std::vector<std::string> cells;
    for (const auto& c : t.columns) cells.push_back(csv_cell(c));
    out += join(cells, ',') + "\n";
    for (const auto& row : t.rows) {
        cells.clear();
        for (const auto& c : row) cells.push_back(csv_cell(c));
        out += join(cells, ',') + "\n";
    }
    return out;
}

/// Array of objects, one per row, keyed by column name.
inline std::string to_json(const Table& t) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = row.at(i);
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

inline Table scan_table(const std::vector<ScanRow>& rows) {
    Table t{{"n", "status", "kinds", "repCount", "reps"}, {}};
    for (const auto& r : rows)
        t.rows.push_back({r.n.get_str(), r.status, join(r.kinds), std::to_string(r.rep_count()), join(r.reps)});
    return t;
}

inline Table census_table(const std::vector<Classification>& cls) {
    std::vector<ScanRow> rows;
    for (const auto& c : cls) rows.push_back(summarize(c));
    auto t = scan_table(rows);
    t.columns.push_back("completeness");
    for (std::size_t i = 0; i < cls.size(); ++i) {
        const auto& c = cls[i];
        std::string comp = "none";
        if (auto* r = std::get_if<RepresentableVerdict>(&c.verdict))
            comp = r->completeness.is_proven() ? "proven" : "upToBound " + std::to_string(r->completeness.bound);
        else if (c.is_ndh())
            comp = "proven";
        t.rows[i].push_back(comp);
    }
    return t;
}

inline Table smooth_table(const std::vector<SmoothNumber>& values) {
    Table t{{"value", "a", "b"}, {}};
    for (const auto& s : values) t.rows.push_back({s.value.get_str(), std::to_string(s.two_exp), std::to_string(s.three_exp)});
    return t;
}

inline Table representation_table(const std::vector<Representation>& reps) {
    Table t{{"minuend", "subtrahend", "scale", "form", "x", "y"}, {}};
    for (const auto& r : reps)
        t.rows.push_back({r.minuend.value.get_str(), r.subtrahend.value.get_str(), r.scale.value.get_str(),
                          form_name(r.primitive.tag), std::to_string(r.primitive.exps.x),
                          std::to_string(r.primitive.exps.y)});
    return t;
}

inline Table sums_table(const std::vector<SumRow>& rows) {
    Table t{{"p", "q", "sum", "smooth", "coprime"}, {}};
    for (const auto& r : rows) {
        std::string smooth = r.smooth ? "2^" + std::to_string(r.smooth->two_exp) + "*3^" + std::to_string(r.smooth->three_exp) : "no";
        t.rows.push_back({r.p.get_str(), r.q.get_str(), r.sum.get_str(), smooth, r.coprime ? "yes" : "no"});
    }
    return t;
}

inline Table abc_table(const std::vector<AbcTriple>& triples) {
    Table t{{"a", "b", "c", "radical", "quality", "exceptional"}, {}};
    for (const auto& x : triples)
        t.rows.push_back({x.a.get_str(), x.b.get_str(), x.c.get_str(), x.radical.get_str(), x.quality(),
                          x.exceptional ? "yes" : "no"});
    return t;
}

} // namespace hdiff
