#ifndef MA_JET_HPP
#define MA_JET_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ma/error.hpp"

namespace ma {

/// Base directions of the independent variables, in canonical order t < 1 < 2 < 3.
enum Dir : uint8_t { DT = 0, D1 = 1, D2 = 2, D3 = 3 };

constexpr std::array<Dir, 4> kAllDirs{DT, D1, D2, D3};

inline char dir_char(Dir d)
{
    switch (d) {
    case DT: return 't';
    case D1: return '1';
    case D2: return '2';
    case D3: return '3';
    }
    return '?';
}

/// Multiset of directions packed 4 bits per direction (t,1,2,3). Supports
/// jet orders up to 15; the configured maximum (default 6) is enforced by
/// the prolongation operations, not the representation.
struct Multi {
    uint16_t bits = 0;

    static Multi of(std::initializer_list<Dir> dirs)
    {
        Multi m;
        for (Dir d : dirs) m = m.plus(d);
        return m;
    }

    int count(Dir d) const { return (bits >> (4 * (3 - static_cast<int>(d)))) & 0xF; }
    int order() const { return count(DT) + count(D1) + count(D2) + count(D3); }

    Multi plus(Dir d) const
    {
        Multi m{static_cast<uint16_t>(bits + (1u << (4 * (3 - static_cast<int>(d)))))};
        return m;
    }
    Multi minus(Dir d) const
    {
        Multi m{static_cast<uint16_t>(bits - (1u << (4 * (3 - static_cast<int>(d)))))};
        return m;
    }
    Multi plus(Multi o) const { return Multi{static_cast<uint16_t>(bits + o.bits)}; }

    bool contains(Multi o) const
    {
        for (Dir d : kAllDirs)
            if (count(d) < o.count(d)) return false;
        return true;
    }

    bool operator==(const Multi&) const = default;
    auto operator<=>(const Multi&) const = default;

    std::string str() const
    {
        std::string s;
        for (Dir d : kAllDirs)
            for (int i = 0; i < count(d); ++i) s += dir_char(d);
        return s;
    }
};

/// Dependent-variable ids. u and v are the field components; the remaining
/// slots are formal test functions (wedge-form slots and property tests).
enum Dep : uint8_t {
    DepU = 0,
    DepV = 1,
    DepTF1u = 2,
    DepTF1v = 3,
    DepTF2u = 4,
    DepTF2v = 5,
    DepTF3u = 6,
    DepTF3v = 7,
    DepTG1 = 8,
    DepTG2 = 9,
    DepTG3 = 10,
};

constexpr int kNumDeps = 11;

inline const char* dep_name(Dep d)
{
    static const char* names[kNumDeps] = {"u",  "v",  "p1", "q1", "p2", "q2",
                                          "p3", "q3", "f",  "g",  "h"};
    return names[static_cast<int>(d)];
}

/// Symbolic parameters. Parameters commute with everything; their total
/// derivatives vanish except for the special kt1 block (a formal constant
/// depending on t and z1 only).
enum Param : uint16_t {
    // a1..a13
    Pa1 = 0, Pa2, Pa3, Pa4, Pa5, Pa6, Pa7, Pa8, Pa9, Pa10, Pa11, Pa12, Pa13,
    // b1..b4
    Pb1, Pb2, Pb3, Pb4,
    // c1..c24
    Pc1, Pc2, Pc3, Pc4, Pc5, Pc6, Pc7, Pc8, Pc9, Pc10, Pc11, Pc12,
    Pc13, Pc14, Pc15, Pc16, Pc17, Pc18, Pc19, Pc20, Pc21, Pc22, Pc23, Pc24,
    // c8'
    Pc8p,
    Pbeta, Pgamma, Plambda, Pb0, Pk,
    // formal "constant depending on (t,z1)": D2 k = D3 k = 0, D_t k = kt1_t, D1 k = kt1_1
    Pkt1, Pkt1_t, Pkt1_1,
    // substitution symbol for the F[u_tt -> w] identity
    Pw,
    // unknowns of the H0 ansatz (alpha; beta0..3; gamma blocks)
    Px0, Px1, Px2, Px3, Px4, Px5, Px6, Px7, Px8, Px9, Px10, Px11, Px12, Px13, Px14,
    ParamCount,
};

inline const char* param_name(Param p)
{
    static const char* names[] = {
        "a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9", "a10", "a11", "a12", "a13",
        "b1", "b2", "b3", "b4",
        "c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8", "c9", "c10", "c11", "c12",
        "c13", "c14", "c15", "c16", "c17", "c18", "c19", "c20", "c21", "c22", "c23", "c24",
        "c8p", "beta", "gamma", "lambda", "b0", "k",
        "kt1", "kt1_t", "kt1_1", "w",
        "x0", "x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "x9", "x10", "x11", "x12",
        "x13", "x14",
    };
    return names[static_cast<int>(p)];
}

/// Looks up a parameter by name; throws unknown-name.
Param param_by_name(const std::string& name);

/// A variable of the polynomial ring: either a parameter or a jet coordinate
/// (dependent + direction multiset), packed into 32 bits. Parameters order
/// before jets; jets order by dependent, then by multiset (t-major), which
/// realizes the canonical order u < v, t < 1 < 2 < 3.
struct Key {
    uint32_t bits = 0;

    static Key param(Param p) { return Key{static_cast<uint32_t>(p)}; }
    static Key jet(Dep dep, Multi m)
    {
        return Key{(1u << 31) | (static_cast<uint32_t>(dep) << 16) | m.bits};
    }

    bool is_jet() const { return bits >> 31; }
    bool is_param() const { return !is_jet(); }
    Param as_param() const { return static_cast<Param>(bits & 0xFFFF); }
    Dep dep() const { return static_cast<Dep>((bits >> 16) & 0xFF); }
    Multi multi() const { return Multi{static_cast<uint16_t>(bits & 0xFFFF)}; }

    /// Jet order for jets, 0 for parameters (grading counts jets only).
    int order() const { return is_jet() ? multi().order() : 0; }

    bool operator==(const Key&) const = default;
    auto operator<=>(const Key&) const = default;

    std::string str() const
    {
        if (is_param()) return param_name(as_param());
        std::string s = dep_name(dep());
        if (multi().order() > 0) s += "_" + multi().str();
        return s;
    }
};

inline Key key_u(std::initializer_list<Dir> dirs) { return Key::jet(DepU, Multi::of(dirs)); }
inline Key key_v(std::initializer_list<Dir> dirs) { return Key::jet(DepV, Multi::of(dirs)); }

} // namespace ma

#endif
