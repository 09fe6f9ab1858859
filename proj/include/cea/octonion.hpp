#pragma once

#include "cea/rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cea {

/// Octonion over the rationals. Coordinate 0 is the real part, coordinates
/// 1..7 are the imaginary units e1..e7.
struct Octonion {
    std::array<Rational, 8> coords{};

    static Octonion unit(int i)
    {
        if (i < 0 || i > 7) throw std::invalid_argument("Octonion: unit index out of range");
        Octonion o;
        o.coords[i] = Rational(1);
        return o;
    }
    static Octonion one() { return unit(0); }

    bool is_imaginary() const { return coords[0].is_zero(); }
    bool is_zero() const
    {
        for (const auto &c : coords)
            if (!c.is_zero()) return false;
        return true;
    }

    Octonion operator+(const Octonion &o) const
    {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.coords[i] = coords[i] + o.coords[i];
        return r;
    }
    Octonion operator-(const Octonion &o) const
    {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.coords[i] = coords[i] - o.coords[i];
        return r;
    }
    Octonion operator-() const
    {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.coords[i] = -coords[i];
        return r;
    }
    Octonion scaled(const Rational &c) const
    {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.coords[i] = coords[i] * c;
        return r;
    }
    Octonion conjugate() const
    {
        Octonion r;
        r.coords[0] = coords[0];
        for (int i = 1; i < 8; ++i) r.coords[i] = -coords[i];
        return r;
    }
    Rational real() const { return coords[0]; }
    Rational norm() const
    {
        Rational n;
        for (const auto &c : coords) n += c * c;
        return n;
    }

    friend bool operator==(const Octonion &a, const Octonion &b) { return a.coords == b.coords; }
};

/// Basis multiplication table: e_i * e_j = table[i][j].sign * e_{table[i][j].unit}.
/// Generated by Cayley-Dickson doubling of the quaternions, so the
/// orientation of the seven Fano lines is fixed by the construction rather
/// than hand-entered.
class OctonionTable {
  public:
    struct Cell {
        int sign;
        int unit;
    };

    OctonionTable()
    {
        // Quaternion basis products: 1, i, j, k.
        static constexpr int qsign[4][4] = {
            {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        static constexpr int qunit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        struct Quat {
            std::array<int, 4> c{};
        };
        auto qmul = [&](const Quat &a, const Quat &b) {
            Quat r;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    if (a.c[i] != 0 && b.c[j] != 0)
                        r.c[qunit[i][j]] += a.c[i] * b.c[j] * qsign[i][j];
            return r;
        };
        auto qconj = [](Quat a) {
            for (int i = 1; i < 4; ++i) a.c[i] = -a.c[i];
            return a;
        };
        // Octonion basis as pairs (a, b) = a + b*l: e0..e3 = (1,i,j,k | 0),
        // e4..e7 = (0 | 1,i,j,k). Product: (a,b)(c,d) = (ac - conj(d)b, da + b conj(c)).
        struct Pair {
            Quat a, b;
        };
        std::array<Pair, 8> basis{};
        for (int i = 0; i < 4; ++i) basis[i].a.c[i] = 1;
        for (int i = 0; i < 4; ++i) basis[4 + i].b.c[i] = 1;
        auto qadd = [](const Quat &x, const Quat &y) {
            Quat r;
            for (int i = 0; i < 4; ++i) r.c[i] = x.c[i] + y.c[i];
            return r;
        };
        auto qneg = [](Quat x) {
            for (auto &v : x.c) v = -v;
            return x;
        };
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < 8; ++j) {
                const Pair &x = basis[i];
                const Pair &y = basis[j];
                Pair r;
                r.a = qadd(qmul(x.a, y.a), qneg(qmul(qconj(y.b), x.b)));
                r.b = qadd(qmul(y.b, x.a), qmul(x.b, qconj(y.a)));
                Cell cell{0, 0};
                for (int u = 0; u < 4; ++u) {
                    if (r.a.c[u] != 0) cell = Cell{r.a.c[u], u};
                    if (r.b.c[u] != 0) cell = Cell{r.b.c[u], 4 + u};
                }
                table_[i][j] = cell;
            }
        }
    }

    static const OctonionTable &instance()
    {
        static const OctonionTable t;
        return t;
    }

    Cell cell(int i, int j) const { return table_[i][j]; }

    /// Oriented Fano lines (a,b,c) with e_a e_b = e_c, a < b, in lex order.
    std::vector<std::array<int, 3>> fano_lines() const
    {
        std::vector<std::array<int, 3>> lines;
        for (int a = 1; a <= 7; ++a)
            for (int b = a + 1; b <= 7; ++b) {
                Cell c = table_[a][b];
                if (c.sign == 1 && c.unit >= 1)
                    lines.push_back({a, b, c.unit});
                else if (c.sign == -1 && c.unit >= 1)
                    lines.push_back({a, c.unit, b}); // reorient so the product sign is +
            }
        // Each line is found twice (once per unordered pair on it); dedupe by
        // canonical rotation putting the smallest index first.
        for (auto &l : lines) {
            while (l[0] != std::min({l[0], l[1], l[2]})) l = {l[1], l[2], l[0]};
        }
        std::sort(lines.begin(), lines.end());
        lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
        return lines;
    }

    /// FNV-1a hash of the full basis table; pins the orientation convention
    /// in every machine-readable output.
    std::string fingerprint() const
    {
        uint64_t h = 1469598103934665603ull;
        auto mix = [&](uint8_t byte) {
            h ^= byte;
            h *= 1099511628211ull;
        };
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                mix(static_cast<uint8_t>(i));
                mix(static_cast<uint8_t>(j));
                mix(static_cast<uint8_t>(table_[i][j].sign + 2));
                mix(static_cast<uint8_t>(table_[i][j].unit));
            }
        std::ostringstream os;
        os << std::hex << h;
        return os.str();
    }

  private:
    std::array<std::array<Cell, 8>, 8> table_{};
};

inline Octonion oct_mul(const Octonion &a, const Octonion &b)
{
    const OctonionTable &t = OctonionTable::instance();
    Octonion r;
    for (int i = 0; i < 8; ++i) {
        if (a.coords[i].is_zero()) continue;
        for (int j = 0; j < 8; ++j) {
            if (b.coords[j].is_zero()) continue;
            auto cell = t.cell(i, j);
            r.coords[cell.unit] += a.coords[i] * b.coords[j] * Rational(cell.sign);
        }
    }
    return r;
}

inline Octonion oct_commutator(const Octonion &a, const Octonion &b)
{
    return oct_mul(a, b) - oct_mul(b, a);
}

inline Octonion oct_associator(const Octonion &a, const Octonion &b, const Octonion &c)
{
    return oct_mul(oct_mul(a, b), c) - oct_mul(a, oct_mul(b, c));
}

} // namespace cea
