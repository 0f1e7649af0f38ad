#include "finsler/zeta.hpp"

#include <algorithm>

namespace finsler {

bool ZetaComparison::all_match() const {
    return std::all_of(verdicts.begin(), verdicts.end(),
                       [](const ZetaVerdict& v) { return v.exact_match; });
}

std::vector<int> ZetaComparison::mismatched_indices() const {
    std::vector<int> out;
    for (const auto& v : verdicts)
        if (!v.exact_match) out.push_back(v.index);
    return out;
}

QtpValues eval_qtp(const QtpSymbols& q, double s, double B, double tol) {
    return QtpValues{q.Q.eval(s, B, tol),       q.Q_s.eval(s, B, tol),
                     q.Q_ss.eval(s, B, tol),    q.Theta.eval(s, B, tol),
                     q.Theta_s.eval(s, B, tol), q.Theta_B.eval(s, B, tol),
                     q.Psi.eval(s, B, tol),     q.Psi_s.eval(s, B, tol),
                     q.Psi_ss.eval(s, B, tol),  q.Psi_B.eval(s, B, tol),
                     q.Psi_sB.eval(s, B, tol)};
}

ZetaComparison compare_zeta(const ZetaSet& a, const ZetaSet& b) {
    ZetaComparison cmp;
    std::array<double, 26> av{}, bv{};
    bool have_values = false;
    for (int k = 1; k <= 26; ++k) {
        ZetaVerdict v;
        v.index = k;
        v.exact_match = a.at(k).equals(b.at(k));
        if (!v.exact_match) {
            if (!have_values) {
                av = eval_zeta(a, kWitnessS, kWitnessB);
                bv = eval_zeta(b, kWitnessS, kWitnessB);
                have_values = true;
            }
            ZetaWitness w;
            w.lhs_value = av[static_cast<std::size_t>(k - 1)];
            w.rhs_value = bv[static_cast<std::size_t>(k - 1)];
            v.witness = w;
        }
        cmp.verdicts[static_cast<std::size_t>(k - 1)] = v;
    }
    return cmp;
}

std::array<double, 26> eval_zeta(const ZetaSet& z, double s, double B, double tol) {
    if (z.symbols) return zeta_formula_values(eval_qtp(*z.symbols, s, B, tol), s, B);
    std::array<double, 26> out{};
    for (int k = 1; k <= 26; ++k) {
        const auto& fracs = z.parts[static_cast<std::size_t>(k - 1)];
        if (fracs.empty()) {
            out[static_cast<std::size_t>(k - 1)] = z.at(k).eval(s, B, tol);
        } else {
            double acc = 0.0;
            for (const RatFun& f : fracs) acc += f.eval(s, B, tol);
            out[static_cast<std::size_t>(k - 1)] = acc;
        }
    }
    return out;
}

std::array<double, 26> CompiledZetaSet::eval(double s, double B, double tol) const {
    if (structured_) {
        const auto& p = entries_[0];
        QtpValues v{p[0].eval(s, B, tol), p[1].eval(s, B, tol), p[2].eval(s, B, tol),
                    p[3].eval(s, B, tol), p[4].eval(s, B, tol), p[5].eval(s, B, tol),
                    p[6].eval(s, B, tol), p[7].eval(s, B, tol), p[8].eval(s, B, tol),
                    p[9].eval(s, B, tol), p[10].eval(s, B, tol)};
        return zeta_formula_values(v, s, B);
    }
    std::array<double, 26> out{};
    for (std::size_t k = 0; k < 26; ++k) {
        double acc = 0.0;
        for (const CompiledRatFun& f : entries_[k]) acc += f.eval(s, B, tol);
        out[k] = acc;
    }
    return out;
}

CompiledZetaSet compile_zeta(const ZetaSet& z) {
    CompiledZetaSet out;
    if (z.symbols) {
        out.structured_ = true;
        const QtpSymbols& q = *z.symbols;
        out.entries_.emplace_back();
        for (const RatFun* f : {&q.Q, &q.Q_s, &q.Q_ss, &q.Theta, &q.Theta_s, &q.Theta_B, &q.Psi,
                                &q.Psi_s, &q.Psi_ss, &q.Psi_B, &q.Psi_sB})
            out.entries_.front().emplace_back(*f);
    } else {
        for (std::size_t k = 0; k < 26; ++k) {
            out.entries_.emplace_back();
            if (z.parts[k].empty()) {
                out.entries_.back().emplace_back(z.zeta[k]);
            } else {
                for (const RatFun& f : z.parts[k]) out.entries_.back().emplace_back(f);
            }
        }
    }
    return out;
}

} // namespace finsler
