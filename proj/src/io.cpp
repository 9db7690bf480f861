#include "clgeo/io.hpp"

#include <algorithm>
#include <string>

#include "json.hpp"

namespace clgeo {

namespace {

using nlohmann::json;

json subspace_record(const Subspace& s) {
    json rec;
    rec["type"] = "member";
    json basis = json::array();
    for (int i = 0; i < s.basis.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < s.basis.cols; ++j) row.push_back(static_cast<int>(s.basis.at(i, j)));
        basis.push_back(std::move(row));
    }
    rec["basis"] = std::move(basis);
    if (s.kind == Kind::AG) {
        json pt = json::array();
        for (felem c : s.point) pt.push_back(static_cast<int>(c));
        rec["point"] = std::move(pt);
    }
    return rec;
}

json header_record(const char* type, const Geometry& g, int k, std::size_t count) {
    json h;
    h["schema"] = 1;
    h["type"] = type;
    h["kind"] = g.kind == Kind::PG ? "pg" : "ag";
    h["n"] = g.n;
    h["p"] = g.F->p();
    h["e"] = g.F->e();
    h["modulus"] = g.F->modulus();
    h["k"] = k;
    h["count"] = count;
    return h;
}

[[noreturn]] void fail(int line, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + what);
}

json parse_line(std::istream& in, int& line) {
    std::string text;
    while (std::getline(in, text)) {
        ++line;
        if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j = json::parse(text, nullptr, false);
        if (j.is_discarded()) fail(line, "malformed JSON record");
        return j;
    }
    fail(line + 1, "unexpected end of file");
}

struct ParsedHeader {
    Geometry g;
    int k;
    std::size_t count;
};

ParsedHeader read_header(std::istream& in, int& line, const char* want) {
    json h = parse_line(in, line);
    for (const char* key : {"schema", "type", "kind", "n", "p", "e", "k", "count"})
        if (!h.contains(key)) fail(line, std::string("header missing field '") + key + "'");
    if (h["schema"] != 1) fail(line, "unsupported schema version");
    if (h["type"] != want) fail(line, std::string("expected a ") + want + " header");
    const std::string kind = h["kind"];
    if (kind != "pg" && kind != "ag") fail(line, "kind must be 'pg' or 'ag'");
    try {
        Geometry g(kind == "pg" ? Kind::PG : Kind::AG, h["n"],
                   Field::get(h["p"], h["e"]));
        return {g, h["k"], h["count"]};
    } catch (const std::exception& e) {
        fail(line, e.what());
    }
}

Subspace read_member(std::istream& in, int& line, const Geometry& g, int k) {
    json rec = parse_line(in, line);
    if (rec.value("type", "") != "member") fail(line, "expected a member record");
    if (!rec.contains("basis") || !rec["basis"].is_array())
        fail(line, "member record missing basis matrix");
    const int cols = g.kind == Kind::PG ? g.n + 1 : g.n;
    GFMat basis(*g.F, 0, cols);
    for (const auto& row : rec["basis"]) {
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            fail(line, "basis row has wrong length");
        std::vector<felem> r(cols);
        for (int j = 0; j < cols; ++j) {
            int v = row[j];
            if (v < 0 || v >= g.q()) fail(line, "basis entry outside GF(q)");
            r[j] = static_cast<felem>(v);
        }
        basis.append_row(r);
    }
    try {
        Subspace s = g.kind == Kind::PG
                         ? make_pg_subspace(g, basis)
                         : make_ag_flat(g, basis, [&] {
                               if (!rec.contains("point")) fail(line, "affine member missing point");
                               std::vector<felem> pt(g.n);
                               const auto& arr = rec["point"];
                               if (!arr.is_array() || static_cast<int>(arr.size()) != g.n)
                                   fail(line, "point has wrong length");
                               for (int j = 0; j < g.n; ++j) {
                                   int v = arr[j].get<int>();
                                   if (v < 0 || v >= g.q()) fail(line, "point entry outside GF(q)");
                                   pt[j] = static_cast<felem>(v);
                               }
                               return pt;
                           }());
        if (s.k != k) fail(line, "member has wrong dimension");
        return s;
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception& e) {
        fail(line, e.what());
    }
}

}  // namespace

void write_kset(std::ostream& out, const KSet& L) {
    out << header_record("kset", L.g, L.k, L.members.size()) << '\n';
    const auto& table = SubspaceTable::get(L.g, L.k);
    for (int id : L.members) out << subspace_record(table.at(id)) << '\n';
}

KSet read_kset(std::istream& in) {
    int line = 0;
    ParsedHeader h = read_header(in, line, "kset");
    const auto& table = SubspaceTable::get(h.g, h.k);
    std::vector<int> ids;
    for (std::size_t i = 0; i < h.count; ++i)
        ids.push_back(table.id_of(read_member(in, line, h.g, h.k)));
    return make_kset(h.g, h.k, std::move(ids));
}

void write_spread(std::ostream& out, const Spread& s, bool exhaustive) {
    json h = header_record("spread", s.g, s.k, s.members.size());
    h["exhaustive"] = exhaustive;
    out << h << '\n';
    const auto& table = SubspaceTable::get(s.g, s.k);
    for (int id : s.members) out << subspace_record(table.at(id)) << '\n';
}

std::pair<Spread, bool> read_spread(std::istream& in) {
    int line = 0;
    // peek the header for the exhaustive flag, then parse members normally
    std::streampos at = in.tellg();
    json h = parse_line(in, line);
    bool exhaustive = h.value("exhaustive", true);
    in.seekg(at);
    line = 0;
    ParsedHeader ph = read_header(in, line, "spread");
    const auto& table = SubspaceTable::get(ph.g, ph.k);
    Spread s{ph.g, ph.k, {}};
    for (std::size_t i = 0; i < ph.count; ++i)
        s.members.push_back(table.id_of(read_member(in, line, ph.g, ph.k)));
    std::sort(s.members.begin(), s.members.end());
    return {s, exhaustive};
}

}  // namespace clgeo
