#include "riordan/json_io.hpp"

#include <sstream>
#include <utility>
#include <vector>

#include "riordan/error.hpp"

namespace riordan {

namespace {

Json series_to_json(const Series& s) {
    Json out = Json::array();
    for (int k = 0; k <= s.trunc_order(); ++k) out.push_back(rat_to_string(s[k]));
    return out;
}

Rat rat_from_json(const Json& v, const std::string& where) {
    if (!v.is_string()) throw ParseError("matrix document: " + where + " must be a rational string", 0);
    return rat_from_string(v.get<std::string>());
}

}  // namespace

Json matrix_to_json(const RiordanMatrix& m) {
    Json doc;
    doc["order"] = m.order();
    doc["d"] = series_to_json(m.d());
    doc["h"] = series_to_json(m.h());
    Json rows = Json::array();
    for (int i = 0; i <= m.order(); ++i) {
        Json row = Json::array();
        for (int j = 0; j <= i; ++j) row.push_back(rat_to_string(m.entry(i, j)));
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    return doc;
}

RiordanMatrix matrix_from_json(const Json& doc) {
    if (!doc.is_object()) throw ParseError("matrix document: expected a JSON object", 0);
    for (const char* key : {"order", "d", "h", "rows"})
        if (!doc.contains(key))
            throw ParseError(std::string("matrix document: missing field '") + key + "'", 0);
    if (!doc["order"].is_number_integer() || doc["order"].get<long>() < 0)
        throw ParseError("matrix document: 'order' must be a nonnegative integer", 0);
    const int n = doc["order"].get<int>();

    auto series_field = [n](const Json& arr, const std::string& name) {
        if (!arr.is_array() || arr.size() != static_cast<std::size_t>(n) + 1)
            throw ParseError("matrix document: '" + name + "' must have order+1 entries", 0);
        std::vector<Rat> coeffs;
        coeffs.reserve(arr.size());
        for (const auto& v : arr) coeffs.push_back(rat_from_json(v, "'" + name + "' entry"));
        return Series(std::move(coeffs));
    };
    Series d = series_field(doc["d"], "d");
    Series h = series_field(doc["h"], "h");

    const Json& rows = doc["rows"];
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n) + 1)
        throw ParseError("matrix document: 'rows' must have order+1 rows", 0);
    std::vector<std::vector<Rat>> grid(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array() || rows[i].size() != i + 1)
            throw ParseError("matrix document: row " + std::to_string(i) + " must have " +
                                 std::to_string(i + 1) + " entries",
                             0);
        for (const auto& v : rows[i]) grid[i].push_back(rat_from_json(v, "row entry"));
    }
    return RiordanMatrix::from_parts(std::move(d), std::move(h), std::move(grid));
}

RiordanMatrix matrix_from_json_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
    }
    return matrix_from_json(doc);
}

std::string matrix_to_triangle(const RiordanMatrix& m) {
    std::ostringstream out;
    for (int i = 0; i <= m.order(); ++i) {
        for (int j = 0; j <= i; ++j) {
            if (j > 0) out << ' ';
            out << rat_to_string(m.entry(i, j));
        }
        out << '\n';
    }
    return out.str();
}

std::string matrix_to_csv(const RiordanMatrix& m) {
    std::ostringstream out;
    out << "row,col,value\n";
    for (int i = 0; i <= m.order(); ++i)
        for (int j = 0; j <= i; ++j)
            out << i << ',' << j << ',' << rat_to_string(m.entry(i, j)) << '\n';
    return out.str();
}

Json certificate_to_json(const FactorizationCertificate& cert) {
    Json doc;
    doc["target"] = matrix_to_json(cert.target);
    Json factors = Json::array();
    for (const RiordanMatrix& f : cert.factors) factors.push_back(matrix_to_json(f));
    doc["factors"] = std::move(factors);
    doc["verified"] = cert.verified;
    doc["widths"] = cert.factors.size();
    return doc;
}

}  // namespace riordan
