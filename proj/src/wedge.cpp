#include "ma/wedge.hpp"

#include <algorithm>
#include <map>

#include "ma/variational.hpp"

namespace ma {

Form Form::make(std::vector<Term> raw)
{
    std::map<std::vector<Gen>, Poly> acc;
    for (auto& t : raw) {
        if (t.coeff.is_zero()) continue;
        // bubble sort tracking parity; a repeated generator kills the term
        auto gens = t.gens;
        int sign = 1;
        for (size_t i = 0; i + 1 < gens.size(); ++i)
            for (size_t j = 0; j + 1 < gens.size() - i; ++j)
                if (gens[j + 1] < gens[j]) {
                    std::swap(gens[j], gens[j + 1]);
                    sign = -sign;
                }
        bool repeat = false;
        for (size_t i = 0; i + 1 < gens.size(); ++i)
            if (gens[i] == gens[i + 1]) repeat = true;
        if (repeat) continue;
        Poly c = sign > 0 ? t.coeff : -t.coeff;
        acc[gens] += c;
    }
    Form f;
    for (auto& [g, c] : acc)
        if (!c.is_zero()) f.terms_.push_back({g, c});
    return f;
}

Form Form::wedge2(Poly c, Gen a, Gen b) { return make({{std::vector<Gen>{a, b}, std::move(c)}}); }

Form Form::operator+(const Form& o) const
{
    std::vector<Term> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return make(std::move(all));
}

Form Form::operator-(const Form& o) const
{
    std::vector<Term> all = terms_;
    for (auto& t : o.terms_) all.push_back({t.gens, -t.coeff});
    return make(std::move(all));
}

Form Form::scaled(const Poly& c) const
{
    std::vector<Term> all;
    for (auto& t : terms_) all.push_back({t.gens, t.coeff * c});
    return make(std::move(all));
}

Form Form::d(int) const
{
    std::vector<Term> out;
    for (auto& t : terms_) {
        for (Key k : t.coeff.support()) {
            if (!k.is_jet()) continue;
            if (k.dep() != DepU && k.dep() != DepV) continue;
            Poly dc = t.coeff.partial(k);
            Gen g = k.dep() == DepU ? Gen::du(k.multi()) : Gen::dv(k.multi());
            std::vector<Gen> gens;
            gens.push_back(g);
            gens.insert(gens.end(), t.gens.begin(), t.gens.end());
            out.push_back({std::move(gens), std::move(dc)});
        }
    }
    return make(std::move(out));
}

std::string Form::str() const
{
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& t : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + t.coeff.str() + ")";
        for (auto& g : t.gens) s += "^" + g.str();
    }
    return s;
}

Form omega_from_K(const LinOp& K11, const Poly& K12)
{
    std::vector<Form::Term> out;
    for (auto& [m, c] : K11.atoms()) {
        Poly cp = c.as_polynomial();
        out.push_back({{Gen::du(Multi{}), Gen::du(m)}, cp * rat(1, 2)});
    }
    out.push_back({{Gen::du(Multi{}), Gen::dv(Multi{})}, K12});
    return Form::make(std::move(out));
}

namespace {

Key slot_jet(int slot, Gen g)
{
    static const Dep slots[3][2] = {{DepTF1u, DepTF1v}, {DepTF2u, DepTF2v}, {DepTF3u, DepTF3v}};
    return Key::jet(slots[slot][g.component()], g.multi());
}

} // namespace

Poly pair_with_test_slots(const Form& threeForm)
{
    static const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    static const int sign[6] = {1, 1, 1, -1, -1, -1};
    Poly T;
    for (auto& t : threeForm.terms()) {
        if (t.gens.size() != 3) throw Error(ErrorCode::Internal, "pairing needs a 3-form");
        for (int s = 0; s < 6; ++s) {
            Mono m = Mono::of(slot_jet(perm[s][0], t.gens[0]))
                         .times(Mono::of(slot_jet(perm[s][1], t.gens[1])))
                         .times(Mono::of(slot_jet(perm[s][2], t.gens[2])));
            T += Poly::mono(m, Rat(sign[s])) * t.coeff;
        }
    }
    return T;
}

bool closed_mod_divergence(const Form& omega)
{
    Form dw = omega.d();
    if (dw.is_zero()) return true;
    Poly T = pair_with_test_slots(dw);
    return divergence_test(T);
}

} // namespace ma
