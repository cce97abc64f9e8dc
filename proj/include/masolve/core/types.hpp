#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <string>

namespace masolve {

inline constexpr int kMaxDim = 4;

/// Small point/vector in R^n with runtime dimension n <= 4.
struct Vec {
    std::array<double, kMaxDim> c{};
    int n = 2;

    Vec() = default;
    Vec(double x, double y) : c{x, y, 0.0, 0.0}, n(2) {}
    Vec(double x, double y, double z) : c{x, y, z, 0.0}, n(3) {}
    Vec(double x, double y, double z, double w) : c{x, y, z, w}, n(4) {}
    static Vec zero(int dim) {
        Vec v;
        v.n = dim;
        return v;
    }

    double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

    Vec& operator+=(const Vec& o) {
        for (int i = 0; i < n; ++i) c[i] += o.c[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (int i = 0; i < n; ++i) c[i] -= o.c[i];
        return *this;
    }
    Vec& operator*=(double s) {
        for (int i = 0; i < n; ++i) c[i] *= s;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(double s, Vec a) { return a *= s; }
    friend Vec operator*(Vec a, double s) { return a *= s; }
};

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (int i = 0; i < a.n; ++i) s += a.c[i] * b.c[i];
    return s;
}

inline double norm2(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm2(a)); }

/// |x'| where x = (x', x_n): the radial coordinate of the first n-1 components.
inline double radial(const Vec& x) {
    double s = 0.0;
    for (int i = 0; i + 1 < x.n; ++i) s += x.c[i] * x.c[i];
    return std::sqrt(s);
}

inline std::string to_string(const Vec& x) {
    std::string s = "(";
    for (int i = 0; i < x.n; ++i) {
        if (i) s += ", ";
        s += std::to_string(x.c[i]);
    }
    return s + ")";
}

}  // namespace masolve
