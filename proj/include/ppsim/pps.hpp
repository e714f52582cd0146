// pps.hpp
// Pseudorandom phase sequence sets: cyclic shifts of an m-sequence padded to
// length p^s, labeled by GF(p)^s elements so that the element-wise product of
// two sequences is exact label addition. Verification of the closure, balance
// and orthogonality axioms.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ppsim/common.hpp"
#include "ppsim/galois.hpp"

namespace ppsim {

// One p-ary symbol sequence of length L = p^s. The phase view is derived:
// symbol m at slot k contributes the phase 2*pi*m/p.
struct PhaseSequence {
    std::vector<int> symbols;
    FieldElement label;
    int modulus = 2;  // p

    long length() const { return static_cast<long>(symbols.size()); }

    double phase(long k) const {
        return 2.0 * kPi * symbols[static_cast<std::size_t>(k)] / modulus;
    }
};

struct VerificationReport {
    bool primitive_ok = false;
    bool closure_ok = false;
    double balance_max_dev = 0.0;        // max over nonzero sequences of |sum_k e^{i lambda_k}|
    double orthogonality_max_dev = 0.0;  // max entry of |Gram - I|
    long sequence_length = 0;

    // Balance is a sum of L unit vectors, so its tolerance scales with L.
    bool passed(double tol = kDefaultTolerance) const {
        return primitive_ok && closure_ok &&
               balance_max_dev <= tol * static_cast<double>(sequence_length) &&
               orthogonality_max_dev <= tol;
    }
};

// The full set of L = p^s sequences: the all-zero sequence plus the p^s - 1
// cyclic shifts of the base m-sequence, each padded with one trailing zero.
// Labels are the initial s-symbol windows of the unpadded shifts, which makes
// the label map a group isomorphism onto (GF(p)^s, +).
class PpsSet {
  public:
    static PpsSet build(const PpsParams& params) {
        params.validate();
        const std::vector<int> base = generate_m_sequence(params);  // throws if not primitive
        const long period = params.period();
        const int s = params.s;

        std::map<FieldElement, PhaseSequence> seqs;
        std::vector<FieldElement> antilog;
        antilog.reserve(static_cast<std::size_t>(period));

        FieldElement zero = zero_element(s);
        seqs.emplace(zero, PhaseSequence{std::vector<int>(static_cast<std::size_t>(period) + 1, 0),
                                         zero, params.p});

        for (long k = 0; k < period; ++k) {
            std::vector<int> shifted(static_cast<std::size_t>(period) + 1, 0);
            for (long n = 0; n < period; ++n) {
                shifted[static_cast<std::size_t>(n)] =
                    base[static_cast<std::size_t>((n + k) % period)];
            }
            // trailing slot stays zero: the padding position is shared by the
            // whole set, which keeps closure exact
            FieldElement label{std::vector<int>(shifted.begin(), shifted.begin() + s)};
            antilog.push_back(label);
            seqs.emplace(std::move(label),
                         PhaseSequence{std::move(shifted), antilog.back(), params.p});
        }
        if (seqs.size() != static_cast<std::size_t>(params.length())) {
            throw std::logic_error("duplicate shift labels; polynomial was not primitive");
        }
        return PpsSet(params, std::move(seqs), std::move(antilog));
    }

    // Assembly from explicit sequences (JSON import, fault-injection tests).
    // Checks structure only; axiom checks stay in verify_properties.
    static PpsSet from_sequences(const PpsParams& params,
                                 std::map<FieldElement, PhaseSequence> seqs) {
        params.validate();
        if (seqs.size() != static_cast<std::size_t>(params.length())) {
            throw std::invalid_argument("sequence set must contain exactly p^s sequences");
        }
        std::vector<FieldElement> antilog;
        for (const auto& [label, seq] : seqs) {
            if (label.coeffs.size() != static_cast<std::size_t>(params.s)) {
                throw std::invalid_argument("label degree must equal s");
            }
            if (seq.length() != params.length()) {
                throw std::invalid_argument("every sequence must have length p^s");
            }
            for (int sym : seq.symbols) {
                if (sym < 0 || sym >= params.p) {
                    throw std::invalid_argument("symbols must lie in [0, p)");
                }
            }
            if (!label.is_zero()) antilog.push_back(label);
        }
        return PpsSet(params, std::move(seqs), std::move(antilog));
    }

    const PpsParams& params() const { return params_; }
    long size() const { return params_.length(); }
    FieldElement zero_label() const { return zero_element(params_.s); }

    bool contains(const FieldElement& label) const { return sequences_.count(label) > 0; }

    const PhaseSequence& sequence(const FieldElement& label) const {
        auto it = sequences_.find(label);
        if (it == sequences_.end()) {
            throw std::invalid_argument("label is not a member of the sequence set");
        }
        return it->second;
    }

    // Label of shift k, k in [0, p^s - 1).
    const FieldElement& antilog(long k) const {
        if (k < 0 || k >= static_cast<long>(antilog_.size())) {
            throw std::out_of_range("shift index out of range");
        }
        return antilog_[static_cast<std::size_t>(k)];
    }

    long log(const FieldElement& label) const {
        auto it = log_.find(label);
        if (it == log_.end()) {
            throw std::invalid_argument("label has no discrete logarithm (zero or unknown)");
        }
        return it->second;
    }

    // e^{2 pi i m / p}, one table shared by the set so equal symbols map to
    // bit-identical phase factors.
    Complex root(int symbol) const { return roots_[static_cast<std::size_t>(symbol)]; }

    int symbol(const FieldElement& label, long k) const {
        return sequence(label).symbols[static_cast<std::size_t>(k)];
    }

    Complex phase_factor(const FieldElement& label, long k) const {
        return root(symbol(label, k));
    }

    const std::map<FieldElement, PhaseSequence>& sequences() const { return sequences_; }

  private:
    PpsSet(PpsParams params, std::map<FieldElement, PhaseSequence> seqs,
           std::vector<FieldElement> antilog)
        : params_(std::move(params)), sequences_(std::move(seqs)), antilog_(std::move(antilog)) {
        for (std::size_t k = 0; k < antilog_.size(); ++k) {
            log_.emplace(antilog_[k], static_cast<long>(k));
        }
        roots_.reserve(static_cast<std::size_t>(params_.p));
        for (int m = 0; m < params_.p; ++m) {
            roots_.push_back(std::polar(1.0, 2.0 * kPi * m / params_.p));
        }
    }

    PpsParams params_;
    std::map<FieldElement, PhaseSequence> sequences_;
    std::vector<FieldElement> antilog_;
    std::map<FieldElement, long> log_;
    std::vector<Complex> roots_;
};

inline PpsSet build_pps_set(const PpsParams& params) { return PpsSet::build(params); }

inline std::shared_ptr<const PpsSet> build_pps_set_shared(const PpsParams& params) {
    return std::make_shared<const PpsSet>(PpsSet::build(params));
}

// Label of the element-wise product of the sequences labeled a and b.
inline FieldElement sequence_product(const PpsSet& set, const FieldElement& a,
                                     const FieldElement& b) {
    if (!set.contains(a) || !set.contains(b)) {
        throw std::invalid_argument("sequence_product: label is not a member of the set");
    }
    return add(a, b, set.params().p);
}

// (1/L) sum_k e^{i(lambda_k^x - lambda_k^y)}. Equals 1 for identical set
// members and 0 for distinct ones.
inline Complex normalized_correlation(const PhaseSequence& x, const PhaseSequence& y) {
    if (x.length() != y.length()) {
        throw std::invalid_argument("normalized_correlation: sequence lengths differ");
    }
    Complex sum{0.0, 0.0};
    if (x.modulus == y.modulus) {
        const int p = x.modulus;
        for (long k = 0; k < x.length(); ++k) {
            int d = (x.symbols[static_cast<std::size_t>(k)] -
                     y.symbols[static_cast<std::size_t>(k)] + p) % p;
            sum += std::polar(1.0, 2.0 * kPi * d / p);
        }
    } else {
        for (long k = 0; k < x.length(); ++k) {
            sum += std::polar(1.0, x.phase(k) - y.phase(k));
        }
    }
    return sum / static_cast<double>(x.length());
}

// Closure checked exactly over all label pairs; balance and orthogonality
// reported as maximum deviations.
inline VerificationReport verify_properties(const PpsSet& set) {
    VerificationReport report;
    report.sequence_length = set.size();
    try {
        report.primitive_ok = verify_primitive(set.params());
    } catch (const std::invalid_argument&) {
        report.primitive_ok = false;
    }

    const int p = set.params().p;
    report.closure_ok = true;
    for (const auto& [la, sa] : set.sequences()) {
        for (const auto& [lb, sb] : set.sequences()) {
            const FieldElement lc = add(la, lb, p);
            if (!set.contains(lc)) {
                report.closure_ok = false;
                continue;
            }
            const PhaseSequence& sc = set.sequence(lc);
            for (long k = 0; k < set.size(); ++k) {
                auto i = static_cast<std::size_t>(k);
                if ((sa.symbols[i] + sb.symbols[i]) % p != sc.symbols[i]) {
                    report.closure_ok = false;
                    break;
                }
            }
        }
    }

    for (const auto& [label, seq] : set.sequences()) {
        if (label.is_zero()) continue;
        Complex sum{0.0, 0.0};
        for (int sym : seq.symbols) sum += set.root(sym);
        report.balance_max_dev = std::max(report.balance_max_dev, std::abs(sum));
    }

    for (const auto& [la, sa] : set.sequences()) {
        for (const auto& [lb, sb] : set.sequences()) {
            const Complex g = normalized_correlation(sa, sb);
            const double expected = (la == lb) ? 1.0 : 0.0;
            report.orthogonality_max_dev =
                std::max(report.orthogonality_max_dev, std::abs(g - expected));
        }
    }
    return report;
}

}  // namespace ppsim
