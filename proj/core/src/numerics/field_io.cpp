#include "cancelfield/numerics/field_io.hpp"

#include "cancelfield/error.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace cancelfield::num {

namespace {

void put_u64(std::ostream& os, std::uint64_t v) {
    std::array<char, 8> b{};
    for (int n = 0; n < 8; ++n) b[n] = static_cast<char>((v >> (8 * n)) & 0xffu);
    os.write(b.data(), 8);
}

std::uint64_t get_u64(std::istream& is) {
    std::array<unsigned char, 8> b{};
    if (!is.read(reinterpret_cast<char*>(b.data()), 8)) throw Error("binary field: truncated input");
    std::uint64_t v = 0;
    for (int n = 0; n < 8; ++n) v |= static_cast<std::uint64_t>(b[n]) << (8 * n);
    return v;
}

std::ofstream open_out(const std::filesystem::path& p, bool binary) {
    std::ofstream os(p, binary ? std::ios::binary : std::ios::out);
    if (!os) throw Error("cannot open " + p.string() + " for writing");
    return os;
}

} // namespace

void write_csv(std::ostream& os, const ScalarField2D& s) {
    const auto& g = s.grid();
    os << "x,z,value\n";
    char buf[96];
    for (std::size_t i = 0; i < g.nx(); ++i) {
        for (std::size_t k = 0; k < g.nz(); ++k) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", g.x(i), g.z(k), s(i, k));
            os << buf;
        }
    }
}

void write_csv(const std::filesystem::path& p, const ScalarField2D& s) {
    auto os = open_out(p, false);
    write_csv(os, s);
}

ScalarField2D read_csv(const std::filesystem::path& p) {
    std::ifstream is(p);
    if (!is) throw Error("cannot open " + p.string());
    std::string line;
    std::getline(is, line);
    if (line != "x,z,value") throw Error(p.string() + ": unexpected CSV header");
    std::vector<double> xs, zs, vals;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        double x = 0, z = 0, v = 0;
        char c1 = 0, c2 = 0;
        if (!(ls >> x >> c1 >> z >> c2 >> v) || c1 != ',' || c2 != ',') {
            throw Error(p.string() + ": malformed CSV line '" + line + "'");
        }
        xs.push_back(x);
        zs.push_back(z);
        vals.push_back(v);
    }
    std::size_t nz = 0;
    while (nz < xs.size() && xs[nz] == xs[0]) ++nz;
    if (nz == 0 || vals.size() % nz != 0) throw Error(p.string() + ": CSV is not a full tensor grid");
    Grid2D g(vals.size() / nz, nz, zs[nz - 1]);
    return ScalarField2D(g, std::move(vals));
}

void write_binary(std::ostream& os, const ScalarField2D& s) {
    put_u64(os, s.nx());
    put_u64(os, s.nz());
    put_u64(os, std::bit_cast<std::uint64_t>(s.grid().Z()));
    for (double v : s.values()) put_u64(os, std::bit_cast<std::uint64_t>(v));
}

void write_binary(const std::filesystem::path& p, const ScalarField2D& s) {
    auto os = open_out(p, true);
    write_binary(os, s);
}

ScalarField2D read_binary(std::istream& is) {
    const auto nx = get_u64(is);
    const auto nz = get_u64(is);
    const double Z = std::bit_cast<double>(get_u64(is));
    Grid2D g(nx, nz, Z);
    std::vector<double> v(g.size());
    for (double& x : v) x = std::bit_cast<double>(get_u64(is));
    return ScalarField2D(g, std::move(v));
}

ScalarField2D read_binary(const std::filesystem::path& p) {
    std::ifstream is(p, std::ios::binary);
    if (!is) throw Error("cannot open " + p.string());
    return read_binary(is);
}

} // namespace cancelfield::num
