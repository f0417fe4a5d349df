#pragma once

// ZKF1 field snapshot format (little-endian):
//   bytes 0..3   magic "ZKF1"
//   u32          N (samples per axis)
//   f64          L (box length)
//   u8           kind: 0 real, 1 complex
//   f64 payload  row-major values; (re, im) pairs when complex

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zsw/field.hpp"
#include "zsw/grid.hpp"

namespace zsw {

namespace detail {

template <typename T>
void put(std::string& buf, T v) {
    char tmp[sizeof(T)];
    std::memcpy(tmp, &v, sizeof(T));
    buf.append(tmp, sizeof(T));
}

template <typename T>
T get(const std::string& buf, std::size_t& off) {
    if (off + sizeof(T) > buf.size()) throw std::runtime_error("ZKF1: truncated file");
    T v;
    std::memcpy(&v, buf.data() + off, sizeof(T));
    off += sizeof(T);
    return v;
}

inline std::string serialize_header(const Grid2D& g, std::uint8_t kind) {
    std::string buf;
    buf.append("ZKF1", 4);
    put<std::uint32_t>(buf, static_cast<std::uint32_t>(g.n));
    put<double>(buf, g.box);
    put<std::uint8_t>(buf, kind);
    return buf;
}

inline void write_file(const std::string& path, const std::string& buf) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("ZKF1: cannot open for writing: " + path);
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) throw std::runtime_error("ZKF1: write failed: " + path);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("ZKF1: cannot open: " + path);
    std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return buf;
}

}  // namespace detail

inline void save_field(const std::string& path, const RealField& f) {
    std::string buf = detail::serialize_header(f.grid, 0);
    for (double x : f.v) detail::put<double>(buf, x);
    detail::write_file(path, buf);
}

inline void save_field(const std::string& path, const ComplexField& f) {
    std::string buf = detail::serialize_header(f.grid, 1);
    for (const cplx& x : f.v) {
        detail::put<double>(buf, x.real());
        detail::put<double>(buf, x.imag());
    }
    detail::write_file(path, buf);
}

inline std::uint8_t peek_kind(const std::string& path) {
    std::string buf = detail::read_file(path);
    if (buf.size() < 17 || buf.compare(0, 4, "ZKF1") != 0)
        throw std::runtime_error("ZKF1: bad magic in " + path);
    return static_cast<std::uint8_t>(buf[16]);
}

namespace detail {

inline Grid2D parse_header(const std::string& buf, std::size_t& off, std::uint8_t expect_kind,
                           const std::string& path) {
    if (buf.size() < 17 || buf.compare(0, 4, "ZKF1") != 0)
        throw std::runtime_error("ZKF1: bad magic in " + path);
    off = 4;
    const auto n = get<std::uint32_t>(buf, off);
    const auto box = get<double>(buf, off);
    const auto kind = get<std::uint8_t>(buf, off);
    if (kind != expect_kind) throw std::runtime_error("ZKF1: wrong field kind in " + path);
    return make_grid(static_cast<int>(n), box);
}

}  // namespace detail

inline RealField load_real_field(const std::string& path) {
    const std::string buf = detail::read_file(path);
    std::size_t off = 0;
    RealField f(detail::parse_header(buf, off, 0, path));
    for (double& x : f.v) x = detail::get<double>(buf, off);
    return f;
}

inline ComplexField load_complex_field(const std::string& path) {
    const std::string buf = detail::read_file(path);
    std::size_t off = 0;
    ComplexField f(detail::parse_header(buf, off, 1, path));
    for (cplx& x : f.v) {
        const double re = detail::get<double>(buf, off);
        const double im = detail::get<double>(buf, off);
        x = cplx(re, im);
    }
    return f;
}

// FNV-1a over the serialized bytes; used to stamp reports with the identity
// of their input fields.
inline std::uint64_t fnv1a64(const void* data, std::size_t len) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string content_hash(const RealField& f) {
    std::string buf = detail::serialize_header(f.grid, 0);
    for (double x : f.v) detail::put<double>(buf, x);
    char out[17];
    std::snprintf(out, sizeof(out), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(buf.data(), buf.size())));
    return out;
}

inline std::string content_hash(const ComplexField& f) {
    std::string buf = detail::serialize_header(f.grid, 1);
    for (const cplx& x : f.v) {
        detail::put<double>(buf, x.real());
        detail::put<double>(buf, x.imag());
    }
    char out[17];
    std::snprintf(out, sizeof(out), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(buf.data(), buf.size())));
    return out;
}

}  // namespace zsw
