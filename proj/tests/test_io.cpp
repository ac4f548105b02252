// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>

#include "lcu/errors.hpp"
#include "lcu/io.hpp"
#include "lcu/state.hpp"

using namespace lcu;

namespace {

errc code_of_read(const std::string& text) {
    std::istringstream in(text);
    try {
        read_state(in, "<test>");
    } catch (const error& e) {
        return e.code();
    }
    return errc::ok;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("state roundtrip is bit exact") {
    const auto g = make_momentum_grid(12.0, 101);
    auto s = random_smooth_state(11, g);
    for (std::size_t i = 0; i < s.amp.size(); ++i)
        s.amp[i] *= cdouble(std::cos(0.1 * i), std::sin(0.1 * i));
    std::ostringstream out;
    write_state(s, out);
    std::istringstream in(out.str());
    const auto back = read_state(in, "<test>");
    CHECK(back.grid.k_max() == s.grid.k_max());
    CHECK(back.grid.n == s.grid.n);
    REQUIRE(back.amp.size() == s.amp.size());
    for (std::size_t i = 0; i < s.amp.size(); ++i) {
        CHECK(back.amp[i].real() == s.amp[i].real());
        CHECK(back.amp[i].imag() == s.amp[i].imag());
    }
}

TEST_CASE("format_double roundtrips doubles") {
    for (double x : {1.0 / 3.0, M_PI, 0.1, -2.5e-17, 1e300, 0.0}) {
        CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
    }
}

TEST_CASE("malformed json is a parse error with a line number") {
    std::istringstream in("{\n  \"grid\": {\n");
    try {
        read_state(in, "<test>");
        FAIL("expected a parse error");
    } catch (const error& e) {
        CHECK(e.code() == errc::parse);
        CHECK(std::string(e.what()).find("line") != std::string::npos);
    }
}

TEST_CASE("schema violations are rejected") {
    CHECK(code_of_read("[1, 2]") == errc::schema);
    CHECK(code_of_read("{}") == errc::schema);
    CHECK(code_of_read(R"({"grid": 3, "amp": []})") == errc::schema);
    CHECK(code_of_read(R"({"grid": {"k_max": 1.0}, "amp": []})") == errc::schema);
    CHECK(code_of_read(R"({"grid": {"k_max": 1.0, "n": 4}, "amp": []})") == errc::schema);
    CHECK(code_of_read(R"({"grid": {"k_max": -1.0, "n": 3}, "amp": []})") == errc::schema);
    CHECK(code_of_read(R"({"grid": {"k_max": 1.0, "n": 3}, "amp": [[0,0],[1,0]]})") ==
          errc::schema);
    CHECK(code_of_read(R"({"grid": {"k_max": 1.0, "n": 3}})") == errc::schema);
    CHECK(code_of_read(R"({"grid": {"k_max": 1.0, "n": 3}, "amp": [[0,0],[1],[0,0]]})") ==
          errc::schema);
    CHECK(code_of_read(
              R"({"grid": {"k_max": 1.0, "n": 3}, "amp": [[0,0],["x",0],[0,0]]})") ==
          errc::schema);
    // a valid minimal state parses
    CHECK(code_of_read(R"({"grid": {"k_max": 1.0, "n": 3}, "amp": [[0,0],[1,0],[0,0]]})") ==
          errc::ok);
}

TEST_CASE("non-finite amplitudes cannot be serialized") {
    const auto g = make_momentum_grid(1.0, 3);
    SpectralState s;
    s.grid = g;
    s.amp = {0.0, std::nan(""), 0.0};
    std::ostringstream out;
    CHECK_THROWS_AS(write_state(s, out), error);
}

TEST_CASE("missing input file is an io error") {
    try {
        read_state_file("/nonexistent/path/state.json");
        FAIL("expected an io error");
    } catch (const error& e) {
        CHECK(e.code() == errc::io);
    }
}

TEST_CASE("timedist csv layout") {
    TimeAmplitude ta;
    ta.grid = make_time_grid(-1.0, 1.0, 3);
    ta.amp = {cdouble(0.5, 0.25), cdouble(1.0, 0.0), cdouble(0.5, -0.25)};
    std::ostringstream out;
    write_timedist_csv(ta, out);
    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "tau,re,im,density");
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        double tau, re, im, density;
        CHECK(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &tau, &re, &im, &density) == 4);
        CHECK(density == doctest::Approx(re * re + im * im).epsilon(1e-15));
    }
    CHECK(rows == 3);
}

TEST_CASE("samples csv layout") {
    SampleBatch b;
    b.values = {1.0, 2.5, -0.125};
    std::ostringstream out;
    write_samples_csv(b, out);
    CHECK(out.str() == "value\n1\n2.5\n-0.125\n");
}

}  // TEST_SUITE
