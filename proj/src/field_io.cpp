#include "ssv/field_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

static_assert(std::endian::native == std::endian::little,
              "SSF1 writer assumes a little-endian host");

namespace ssv {

namespace {

template <class T>
void put(std::ofstream& f, T v) {
    f.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::ifstream& f) {
    T v;
    f.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!f) throw std::runtime_error("SSF1: truncated file");
    return v;
}

}  // namespace

void write_ssf1(const std::string& path, const FieldSeries& series) {
    series.validate();
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("SSF1: cannot open for write: " + path);
    f.write("SSF1", 4);
    const auto& first = series.snapshots.front();
    put<std::uint8_t>(f, static_cast<std::uint8_t>(first.dim()));
    if (first.dim() == 1) {
        const auto& g = std::get<Grid1D>(first.grid);
        put<std::uint32_t>(f, static_cast<std::uint32_t>(g.n));
        put<double>(f, g.x_min);
        put<double>(f, g.x_max);
    } else {
        const auto& g = std::get<Grid2D>(first.grid);
        put<std::uint32_t>(f, static_cast<std::uint32_t>(g.n));
        put<double>(f, g.half_width);
    }
    put<std::uint32_t>(f, static_cast<std::uint32_t>(series.snapshots.size()));
    for (const auto& s : series.snapshots) {
        put<double>(f, s.t);
        f.write(reinterpret_cast<const char*>(s.values.data()),
                static_cast<std::streamsize>(s.values.size() * sizeof(double)));
    }
    if (!f) throw std::runtime_error("SSF1: write failed: " + path);
}

FieldSeries read_ssf1(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("SSF1: cannot open: " + path);
    char magic[4];
    f.read(magic, 4);
    if (!f || std::memcmp(magic, "SSF1", 4) != 0)
        throw std::runtime_error("SSF1: bad magic in " + path);
    auto dim = get<std::uint8_t>(f);
    if (dim != 1 && dim != 2) throw std::runtime_error("SSF1: bad dimensionality");
    auto n = get<std::uint32_t>(f);
    std::variant<Grid1D, Grid2D> grid;
    std::size_t count_per_snap;
    if (dim == 1) {
        double x_min = get<double>(f), x_max = get<double>(f);
        grid = Grid1D{static_cast<int>(n), x_min, x_max};
        count_per_snap = n;
    } else {
        double L = get<double>(f);
        grid = Grid2D{static_cast<int>(n), L};
        count_per_snap = static_cast<std::size_t>(n) * n;
    }
    auto snap_count = get<std::uint32_t>(f);
    FieldSeries series;
    series.snapshots.reserve(snap_count);
    for (std::uint32_t i = 0; i < snap_count; ++i) {
        ScalarFieldSnapshot s;
        s.grid = grid;
        s.t = get<double>(f);
        s.values.resize(count_per_snap);
        f.read(reinterpret_cast<char*>(s.values.data()),
               static_cast<std::streamsize>(count_per_snap * sizeof(double)));
        if (!f) throw std::runtime_error("SSF1: truncated snapshot data");
        series.snapshots.push_back(std::move(s));
    }
    series.validate();
    return series;
}

}  // namespace ssv
