#include <algorithm>

#include "pretzel/braid_index.hpp"

namespace pretzel {

namespace {

struct Counts {
    int rp, rm, kp, km, dp, dm, sa, sb, n, c, cm, w, s, r_plus, r_minus;
    int mu1 = 0, nu1 = 0, amin = 0, a2 = 0;

    explicit Counts(const Type3Grouping& g)
        : rp(g.rho_plus()), rm(g.rho_minus()), kp(g.kappa_plus()), km(g.kappa_minus()),
          dp(g.delta_plus()), dm(g.delta_minus()), sa(g.sum_alpha()), sb(g.sum_beta()), n(g.n()),
          c(g.crossings()), cm(g.sum_nu() + 2 * g.sum_beta()), w(c - 2 * cm),
          s(2 * n - kp - km + 2 * sa + 2 * sb), r_plus(sa - kp), r_minus(sb - km) {
        if (rp) mu1 = g.mu.front();
        if (rm) nu1 = g.nu.front();
        if (kp) amin = g.alpha.back();
        if (kp >= 2) a2 = g.alpha[kp - 2];
    }
};

int sign_of_parity(int k) { return k % 2 == 0 ? 1 : -1; }

FormulaEe make(int E, int e, SignClass h, SignClass l, std::string source) {
    return FormulaEe{E, e, std::move(h), std::move(l), std::move(source)};
}

// degree data of the mirror image
FormulaEe mirrored(const FormulaEe& f) {
    if (f.delegated()) return FormulaEe{std::nullopt, std::nullopt, f.sign_class_h, f.sign_class_l, f.source + "~mirror"};
    return make(-*f.e, -*f.E, f.sign_class_l.times_parity(*f.e), f.sign_class_h.times_parity(*f.E),
                f.source + "~mirror");
}

FormulaEe basic(const Counts& k) {
    const int n = k.n, w = k.w, c = k.c, cm = k.cm, dp = k.dp;
    if (k.rp == 1 && k.rm == 1) {
        if (std::abs(k.mu1 - k.nu1) == 1)
            return make(0, 0, SignClass::monomial(1, 0), SignClass::monomial(1, 0), "basic.single-pair");
        int dd = k.mu1 - k.nu1;
        SignClass h = (dd > 1 || dd == 0) ? SignClass::monomial(1, dd - 1)
                                          : SignClass::monomial(sign_of_parity(k.mu1 + k.nu1), -dd - 3);
        SignClass l = dd > 1 ? SignClass::monomial(-1, dd - 3)
                             : SignClass::monomial(sign_of_parity(1 + k.mu1 + k.nu1), -dd - 1);
        return make(2 * n - w - 1, -2 * n - w + 1, h, l, "basic.single-pair");
    }
    const int E = 2 * n - w - 1;
    if (k.rm == 0) {
        int e = -2 * n - w + 1 + 2 * std::min(n - 1, dp);
        SignClass l = dp < n - 1 ? SignClass::monomial(sign_of_parity(1 + dp), 1 + 2 * dp + c - 6 * n)
                                 : SignClass::monomial(-1, c - 2 * n - 1);
        return make(E, e, SignClass::monomial(1, 1 + c - 2 * n), l, "basic.positive-cycle");
    }
    if (dp == 0)
        return make(E, -2 * n - w + 1, SignClass::parity(cm), SignClass::parity(1 + cm), "basic.no-lone");
    if (dp <= k.rm) {
        int e = (k.rp == k.rm && k.rm == dp) ? -w - 1 : -2 * n - w + 1 + 2 * dp;
        return make(E, e, SignClass::parity(cm), SignClass::parity(1 + dp + cm), "basic.few-lone");
    }
    int e = -2 * n - w + 1 + 2 * std::min(dp, n - 1);
    SignClass l = dp < n - 1 ? SignClass::parity(1 + dp + k.kp + k.km + cm) : SignClass::parity(1 + k.rm + cm);
    return make(E, e, SignClass::parity(cm), l, "basic.many-lone");
}

FormulaEe single_pair(const Type3Grouping& g, const Counts& k) {
    const int kp = k.kp, km = k.km, sa = k.sa, sb = k.sb, mu1 = k.mu1, nu1 = k.nu1, cm = k.cm;
    if (mu1 > 1) {
        if (nu1 == mu1 + 1 && km == 0) {
            int e = -kp - 2 * sa;
            int E = k.amin == 1 ? 2 - kp : -kp;
            SignClass h = k.amin > 2 ? SignClass::exactly(ZPoly::monomial(1, kp)) : SignClass::parity(cm);
            return make(E, e, h, SignClass::parity(1 + kp + cm), "pair.adjacent");
        }
        if (mu1 == nu1 + 1 && kp == 0) {
            FormulaEe f = mirrored(formula_Ee(mirror(g)));
            f.source = "pair.adjacent~mirror";
            return f;
        }
        return make(1 + nu1 - mu1 + km - kp + 2 * sb, -1 + nu1 - mu1 + km - kp - 2 * sa, {}, {}, "pair.general");
    }
    // mu1 == 1
    if (km > 0) {
        int E = nu1 + km - kp + 2 * sb;
        int e = kp == 0 ? nu1 + km - 2 : nu1 + km - kp - 2 * sa;
        return make(E, e, {}, {}, "pair.lone-mixed");
    }
    if (nu1 == 2) {
        if (kp == 1) {
            // the link is the antiparallel torus link T_o(2(alpha1-1), 2)
            int m = 2 * (g.alpha.front() - 1);
            if (m == 0) return make(1, -1, SignClass::monomial(1, -1), SignClass::monomial(-1, -1), "pair.torus");
            AProfile p = a_profile(torus_antiparallel(m));
            return make(p.E, p.e, {}, {}, "pair.torus");
        }
        return FormulaEe{std::nullopt, std::nullopt, SignClass::delegated(), SignClass::delegated(), "delegated"};
    }
    bool high = nu1 >= 4 || (nu1 == 3 && k.amin > 1) || (nu1 == 3 && kp >= 2 && k.amin == 1 && k.a2 == 1);
    int E = high ? nu1 - kp : nu1 - kp - 2;
    return make(E, nu1 - kp - 2 * sa, {}, {}, "pair.lone-positive");
}

FormulaEe double_positive(const Type3Grouping& g, const Counts& k) {
    const int E = k.s - k.w - 1 - 2 * k.r_minus;
    if (k.kp == 0) return make(E, -k.s - k.w + 1, SignClass::of_sign(1), SignClass::parity(1 + k.km), "double.no-alpha");
    if (k.dp == 2 && k.kp == 1)
        return make(E, -k.s - k.w + 1 + 2 * g.alpha.front(), SignClass::parity(k.cm),
                    SignClass::parity(1 + k.rm + k.km + k.cm), "double.lone-pair");
    if (k.dp > k.kp) throw DispatchGap(g.key());
    return make(E, -k.s - k.w + 1 + 2 * k.dp + 2 * k.r_plus, SignClass::parity(k.cm),
                SignClass::parity(1 + k.kp + k.km + k.dp + k.cm), "double.dominated");
}

FormulaEe long_cycle(const Counts& k) {
    const int E = k.s - k.w - 1 - 2 * k.r_minus;
    const int n = k.n, dp = k.dp, kp = k.kp;
    if (dp > k.rm + kp) {
        int m = std::min(dp - kp, n - 1);
        int e = -k.s - k.w + 1 + 2 * kp + 2 * m + 2 * k.r_plus;
        SignClass l = dp - kp < n - 1 ? SignClass::parity(1 + dp + kp + k.km + k.cm)
                                      : SignClass::parity(1 + k.rm + k.km + k.cm);
        return make(E, e, SignClass::parity(k.cm), l, "cycle.many-lone");
    }
    int e = -k.s - k.w + 1 + 2 * std::min(dp, kp) + 2 * std::min(std::max(dp - kp, 0), n - 1) + 2 * k.r_plus;
    return make(E, e, SignClass::parity(k.cm), SignClass::parity(1 + kp + k.km + dp + k.cm), "cycle.few-lone");
}

}  // namespace

nlohmann::json FormulaEe::to_json() const {
    nlohmann::json j = {{"source", source}};
    if (E) j["E"] = *E;
    if (e) j["e"] = *e;
    if (sign_class_h.kind != SignClass::Kind::None) j["sign_class_h"] = sign_class_h.describe();
    if (sign_class_l.kind != SignClass::Kind::None) j["sign_class_l"] = sign_class_l.describe();
    return j;
}

FormulaEe formula_Ee(const Type3Grouping& g) {
    g.validate();
    Counts k(g);
    if (k.dm > 0 || k.rp == 0) return mirrored(formula_Ee(mirror(g)));
    if (k.kp + k.km == 0) return basic(k);
    if (k.rp == 1 && k.rm == 1) return single_pair(g, k);
    if (k.rp == 2 && k.rm == 0) return double_positive(g, k);
    if (k.n >= 2) return long_cycle(k);
    throw DispatchGap(g.key());
}

int lower_bound(const Type3Grouping& g, HomflyEngine& engine) {
    FormulaEe f = formula_Ee(g);
    if (f.delegated()) return profile(g, engine).b0;
    return (*f.E - *f.e) / 2 + 1;
}

FormulaEe alternating_profile(const SeifertStats& st) {
    if (st.has_lone_crossings()) throw std::invalid_argument("formula requires no lone crossings");
    int E = st.s - st.w - 1, e = -st.s - st.w + 1;
    SignClass h = SignClass::monomial(sign_of_parity(st.c_minus), st.c - 2 * st.sigma_minus - st.s + 1);
    SignClass l = SignClass::monomial(sign_of_parity(st.c_minus + st.s - 1), st.c - 2 * st.sigma_plus - st.s + 1);
    return make(E, e, h, l, "alternating");
}

}  // namespace pretzel
