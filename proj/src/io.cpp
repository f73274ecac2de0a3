#include "kronrep/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace kronrep {

namespace {

void expect_fields(const Json& j, const std::vector<std::string>& fields, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (std::find(fields.begin(), fields.end(), it.key()) == fields.end())
            throw ParseError(where + ": unknown field '" + it.key() + "'");
    for (const auto& f : fields)
        if (!j.contains(f)) throw ParseError(where + ": missing field '" + f + "'");
    size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i)
        if (it.key() != fields[i])
            throw ParseError(where + ": field '" + it.key() + "' out of order (expected '" + fields[i] + "')");
}

long as_count(const Json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long>() < 0) throw ParseError(where + ": expected a non-negative integer");
    return j.get<long>();
}

MatQ matrix_from_json(const Json& j, long rows, long cols, const std::string& where) {
    if (!j.is_array() || static_cast<long>(j.size()) != rows)
        throw ParseError(where + ": expected " + std::to_string(rows) + " rows");
    MatQ m(rows, cols);
    for (long i = 0; i < rows; ++i) {
        const Json& row = j[static_cast<size_t>(i)];
        const std::string rw = where + "[" + std::to_string(i) + "]";
        if (!row.is_array() || static_cast<long>(row.size()) != cols)
            throw ParseError(rw + ": expected " + std::to_string(cols) + " entries");
        for (long c = 0; c < cols; ++c)
            m(i, c) = parse_entry(row[static_cast<size_t>(c)], rw + "[" + std::to_string(c) + "]");
    }
    return m;
}

}  // namespace

Rational parse_entry(const Json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where + ": entries must be strings \"p\" or \"p/q\"");
    const std::string s = j.get<std::string>();
    Rational q;
    try {
        q = Rational::parse(s);
    } catch (const std::exception& e) {
        throw ParseError(where + ": " + e.what());
    }
    if (q.str() != s) throw ParseError(where + ": '" + s + "' is not in lowest terms (expected '" + q.str() + "')");
    return q;
}

MatQ parse_subspace_literal(const std::string& text) {
    std::vector<std::vector<Rational>> cols;
    std::stringstream cs(text);
    std::string col;
    while (std::getline(cs, col, ';')) {
        std::vector<Rational> entries;
        std::stringstream es(col);
        std::string e;
        while (std::getline(es, e, ',')) {
            const auto b = e.find_first_not_of(" \t"), t = e.find_last_not_of(" \t");
            if (b == std::string::npos) throw ParseError("subspace literal: empty entry in '" + text + "'");
            try {
                entries.push_back(Rational::parse(e.substr(b, t - b + 1)));
            } catch (const std::exception& ex) {
                throw ParseError("subspace literal: " + std::string(ex.what()));
            }
        }
        cols.push_back(std::move(entries));
    }
    if (cols.empty() || cols.front().empty()) throw ParseError("subspace literal: no columns in '" + text + "'");
    const size_t r = cols.front().size();
    MatQ m(static_cast<long>(r), static_cast<long>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != r) throw ParseError("subspace literal: columns of different length in '" + text + "'");
        for (size_t i = 0; i < r; ++i) m(static_cast<long>(i), static_cast<long>(c)) = cols[c][i];
    }
    return m;
}

Json to_json(const Rational& q) { return q.str(); }

Json to_json(const MatQ& m) {
    Json rows = Json::array();
    for (long i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (long j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const KroneckerRep& m) {
    Json j;
    j["r"] = m.r;
    j["dim"] = {m.dim.x, m.dim.y};
    j["maps"] = Json::array();
    for (const auto& a : m.maps) j["maps"].push_back(to_json(a));
    return j;
}

Json to_json(const SubspaceMap& v) {
    Json j;
    j["d"] = v.d();
    j["cols"] = to_json(v.cols());
    return j;
}

Json to_json(const SplittingType& s) {
    Json j;
    j["b"] = Json::object();
    for (const auto& [i, m] : s.b) j["b"][std::to_string(i)] = m;
    j["remainder"] = s.remainder ? Json{s.remainder->x, s.remainder->y} : Json(nullptr);
    return j;
}

Json to_json(const Verdict& v) {
    Json j;
    j["claim"] = v.claim;
    j["status"] = to_string(v.status);
    j["rule"] = v.rule;
    j["samples"] = v.samples;
    j["witness"] = v.witness;
    return j;
}

Json to_json(const CertificateReport& rep) {
    Json j;
    j["verdicts"] = Json::array();
    for (const auto& v : rep.verdicts) j["verdicts"].push_back(to_json(v));
    j["splitting"] = rep.splitting ? to_json(*rep.splitting) : Json(nullptr);
    j["support"] = Json(std::vector<int>(rep.support.begin(), rep.support.end()));
    j["k_type"] = rep.k_type ? Json(*rep.k_type) : Json(nullptr);
    j["jumping"] = Json::array();
    for (const auto& v : rep.jumping) j["jumping"].push_back(to_json(v));
    j["numbers"] = Json::object();
    for (const auto& [k, v] : rep.numbers) j["numbers"][k] = v;
    return j;
}

Json to_json(const ConstructionResult& c) {
    Json j;
    j["descriptor"] = Json::object();
    for (const auto& [k, v] : c.descriptor) j["descriptor"][k] = v;
    j["rep"] = to_json(c.rep);
    j["intended"] = Json::array();
    for (const auto& ic : c.intended) j["intended"].push_back({{"claim", ic.claim}, {"tag", ic.tag}});
    j["intended_verified"] = c.intended_verified();
    j["verified"] = to_json(c.verified);
    return j;
}

Json to_json(const MorphismPair& f) {
    Json j;
    j["f1"] = to_json(f.f1);
    j["f2"] = to_json(f.f2);
    return j;
}

KroneckerRep rep_from_json(const Json& j) {
    expect_fields(j, {"r", "dim", "maps"}, "representation");
    KroneckerRep m;
    const long r = as_count(j["r"], "r");
    if (r < 1) throw ParseError("r: must be at least 1");
    m.r = static_cast<int>(r);
    if (!j["dim"].is_array() || j["dim"].size() != 2) throw ParseError("dim: expected [x, y]");
    m.dim = {as_count(j["dim"][0], "dim[0]"), as_count(j["dim"][1], "dim[1]")};
    if (!j["maps"].is_array() || static_cast<long>(j["maps"].size()) != r)
        throw ParseError("maps: expected " + std::to_string(r) + " matrices");
    for (long i = 0; i < r; ++i)
        m.maps.push_back(matrix_from_json(j["maps"][static_cast<size_t>(i)], m.dim.y, m.dim.x,
                                          "maps[" + std::to_string(i) + "]"));
    if (auto err = validate(m)) throw ParseError("representation: " + *err);
    return m;
}

SubspaceMap subspace_from_json(const Json& j, const std::string& where) {
    expect_fields(j, {"d", "cols"}, where);
    const long d = as_count(j["d"], where + ".d");
    if (!j["cols"].is_array() || j["cols"].empty()) throw ParseError(where + ".cols: expected an r x d matrix");
    const long r = static_cast<long>(j["cols"].size());
    const MatQ a = matrix_from_json(j["cols"], r, d, where + ".cols");
    if (d < 1 || d > r || rank<Rational>(a) != d) throw ParseError(where + ": columns are not independent");
    return SubspaceMap(a);
}

std::vector<SubspaceMap> planes_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("planes: expected an array of subspaces");
    std::vector<SubspaceMap> out;
    for (size_t i = 0; i < j.size(); ++i) out.push_back(subspace_from_json(j[i], "planes[" + std::to_string(i) + "]"));
    return out;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot write");
    out << text;
}

}  // namespace kronrep
