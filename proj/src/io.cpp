// SPDX-License-Identifier: Apache-2.0
#include "lcu/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

#include "lcu/errors.hpp"

namespace lcu {

namespace {

using nlohmann::json;

std::size_t line_of_byte(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n')
            ++line;
    return line;
}

[[noreturn]] void schema_fail(const std::string& origin, const std::string& what) {
    fail(errc::schema, origin + ": " + what);
}

double number_field(const json& j, const std::string& origin, const std::string& name) {
    if (!j.contains(name))
        schema_fail(origin, "missing field \"" + name + "\"");
    if (!j[name].is_number())
        schema_fail(origin, "field \"" + name + "\" must be a number");
    return j[name].get<double>();
}

} // namespace

std::string format_double(double v) {
    if (!std::isfinite(v))
        fail(errc::precision, "cannot serialize a non-finite number");
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

SpectralState read_state(std::istream& in, const std::string& origin) {
    std::ostringstream raw;
    raw << in.rdbuf();
    const std::string text = raw.str();
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(errc::parse, origin + " line " + std::to_string(line_of_byte(text, e.byte)) +
                              ": " + e.what());
    }
    if (!j.is_object())
        schema_fail(origin, "top level must be an object");
    if (!j.contains("grid"))
        schema_fail(origin, "missing field \"grid\"");
    if (!j["grid"].is_object())
        schema_fail(origin, "field \"grid\" must be an object");
    const double k_max = number_field(j["grid"], origin, "k_max");
    if (!j["grid"].contains("n") || !j["grid"]["n"].is_number_integer())
        schema_fail(origin, "grid field \"n\" must be an integer");
    const auto n = j["grid"]["n"].get<std::int64_t>();
    if (n < 3 || n % 2 == 0)
        schema_fail(origin, "grid size n must be odd and >= 3");
    if (!(k_max > 0.0))
        schema_fail(origin, "k_max must be positive");
    if (!j.contains("amp"))
        schema_fail(origin, "missing field \"amp\"");
    if (!j["amp"].is_array())
        schema_fail(origin, "field \"amp\" must be an array");
    const auto& amp = j["amp"];
    if (amp.size() != static_cast<std::size_t>(n))
        schema_fail(origin, "amp has " + std::to_string(amp.size()) +
                                " entries, grid n is " + std::to_string(n));
    SpectralState s;
    s.grid = make_momentum_grid(k_max, static_cast<std::size_t>(n));
    s.amp.resize(amp.size());
    for (std::size_t i = 0; i < amp.size(); ++i) {
        const auto& pair = amp[i];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
            !pair[1].is_number())
            schema_fail(origin, "amp[" + std::to_string(i) + "] must be [re, im]");
        s.amp[i] = cdouble(pair[0].get<double>(), pair[1].get<double>());
    }
    return s;
}

SpectralState read_state_file(const std::string& path) {
    if (path == "-")
        return read_state(std::cin, "<stdin>");
    std::ifstream in(path);
    if (!in)
        fail(errc::io, "cannot open " + path);
    return read_state(in, path);
}

void write_state(const SpectralState& state, std::ostream& out) {
    if (state.amp.size() != state.grid.n)
        fail(errc::dimension, "state amplitude length does not match grid size");
    out << "{\n  \"grid\": {\"k_max\": " << format_double(state.grid.k_max())
        << ", \"n\": " << state.grid.n << "},\n  \"amp\": [\n";
    for (std::size_t i = 0; i < state.amp.size(); ++i) {
        out << "    [" << format_double(state.amp[i].real()) << ", "
            << format_double(state.amp[i].imag()) << "]";
        out << (i + 1 < state.amp.size() ? ",\n" : "\n");
    }
    out << "  ]\n}\n";
    if (!out)
        fail(errc::io, "write failed");
}

void write_state_file(const SpectralState& state, const std::string& path) {
    if (path == "-") {
        write_state(state, std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out)
        fail(errc::io, "cannot open " + path + " for writing");
    write_state(state, out);
}

void write_timedist_csv(const TimeAmplitude& ta, std::ostream& out) {
    out << "tau,re,im,density\n";
    for (std::size_t i = 0; i < ta.grid.n; ++i) {
        const cdouble v = ta.amp[i];
        out << format_double(ta.grid.nodes[i]) << ',' << format_double(v.real()) << ','
            << format_double(v.imag()) << ',' << format_double(std::norm(v)) << '\n';
    }
    if (!out)
        fail(errc::io, "write failed");
}

void write_timedist_csv_file(const TimeAmplitude& ta, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        fail(errc::io, "cannot open " + path + " for writing");
    write_timedist_csv(ta, out);
}

void write_samples_csv(const SampleBatch& batch, std::ostream& out) {
    out << "value\n";
    for (double v : batch.values)
        out << format_double(v) << '\n';
    if (!out)
        fail(errc::io, "write failed");
}

void write_samples_csv_file(const SampleBatch& batch, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        fail(errc::io, "cannot open " + path + " for writing");
    write_samples_csv(batch, out);
}

} // namespace lcu
