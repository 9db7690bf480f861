#include "doctest.h"

#include <sstream>

#include "clgeo/io.hpp"

using namespace clgeo;

TEST_CASE("k-set files round-trip byte-stably") {
    Geometry pg(Kind::PG, 3, Field::get(2, 1));
    KSet pencil = make_pencil(pg, 1, SubspaceTable::get(pg, 0).at(0));

    std::stringstream buf;
    write_kset(buf, pencil);
    KSet back = read_kset(buf);
    CHECK(back.g == pencil.g);
    CHECK(back.k == pencil.k);
    CHECK(back.members == pencil.members);

    std::stringstream again;
    write_kset(again, back);
    std::stringstream first;
    write_kset(first, pencil);
    CHECK(again.str() == first.str());
}

TEST_CASE("affine k-set files carry representative points") {
    Geometry ag(Kind::AG, 3, Field::get(3, 1));
    KSet pencil = make_pencil(ag, 1, SubspaceTable::get(ag, 0).at(5));
    std::stringstream buf;
    write_kset(buf, pencil);
    CHECK(buf.str().find("\"point\"") != std::string::npos);
    KSet back = read_kset(buf);
    CHECK(back.members == pencil.members);
}

TEST_CASE("spread files round-trip with the exhaustive flag") {
    Geometry pg(Kind::PG, 3, Field::get(2, 1));
    Spread s = desarguesian_spread(pg, 1);
    std::stringstream buf;
    write_spread(buf, s, false);
    auto [back, exhaustive] = read_spread(buf);
    CHECK(!exhaustive);
    CHECK(back.members == s.members);
}

TEST_CASE("malformed files are rejected with line numbers") {
    auto read = [](const std::string& text) {
        std::stringstream in(text);
        return read_kset(in);
    };
    auto message = [&](const std::string& text) {
        try {
            read(text);
        } catch (const std::runtime_error& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };

    CHECK(message("").find("line 1") == 0);
    CHECK(message("{oops").find("line 1") == 0);
    CHECK(message(R"({"schema":2,"type":"kset","kind":"pg","n":3,"p":2,"e":1,"k":1,"count":0})")
              .find("schema") != std::string::npos);
    CHECK(message(R"({"schema":1,"type":"kset","kind":"xx","n":3,"p":2,"e":1,"k":1,"count":0})")
              .find("line 1") == 0);

    // member errors carry the member's line number
    std::string header =
        R"({"schema":1,"type":"kset","kind":"pg","n":3,"p":2,"e":1,"k":1,"count":1})";
    CHECK(message(header + "\n{\"type\":\"member\"}").find("line 2") == 0);
    CHECK(message(header + "\n{\"type\":\"member\",\"basis\":[[9,0,0,0],[0,1,0,0]]}")
              .find("line 2") == 0);
    CHECK(message(header).find("line 2") == 0);  // missing member record
}
