#pragma once

// Step distributions for step-reinforced random walks. A step attaches to a
// cluster, not to a time: xi_j = m_bar(U_j) - mu where U_j is the cluster's
// stored uniform value, so the walk identity
// S_hat(n) = sum_j N_j(n) xi_j is literal (the item-by-item and
// cluster-by-cluster computations use the same xi draws).

#include "rep/errors.hpp"

#include <cmath>
#include <functional>
#include <utility>

namespace rep {

struct StepSpec {
    enum class Kind { plus_minus_one, bounded_from_measure };

    Kind kind = Kind::plus_minus_one;
    std::function<double(double)> m_bar;  // evaluable on [0,1]
    double mu = 0.0;                      // its mean (centering constant)
    double sigma2 = 1.0;                  // Var(xi)
    double bound = 1.0;                   // |xi| <= bound

    // Rademacher steps: the elephant-walk special case.
    static StepSpec plus_minus_one() {
        StepSpec s;
        s.kind = Kind::plus_minus_one;
        s.m_bar = [](double u) { return u < 0.5 ? -1.0 : 1.0; };
        s.mu = 0.0;
        s.sigma2 = 1.0;
        s.bound = 1.0;
        return s;
    }

    static StepSpec from_measure(std::function<double(double)> m_bar,
                                 double mu, double sigma2, double bound) {
        StepSpec s;
        s.kind = Kind::bounded_from_measure;
        s.m_bar = std::move(m_bar);
        s.mu = mu;
        s.sigma2 = sigma2;
        s.bound = bound;
        s.validate();
        return s;
    }

    double xi(double u) const { return m_bar(u) - mu; }

    void validate() const {
        if (!m_bar) throw param_error("step spec needs a measurable map");
        if (!(sigma2 >= 0.0)) throw param_error("step variance must be >= 0");
        if (!(bound > 0.0) || !std::isfinite(bound))
            throw param_error("steps must be bounded by a positive constant");
    }
};

} // namespace rep
