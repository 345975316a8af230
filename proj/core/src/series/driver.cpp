#include "dilog/series/driver.hpp"

#include <algorithm>

#include "dilog/series/tail.hpp"

namespace dilog {

namespace {

struct PartState {
    Ball sum;
    BigFloat tail;
    std::uint64_t count = 0;
    bool done = false;
};

BigFloat infinity() {
    BigFloat inf(kRadiusBits);
    mpfr_set_inf(inf.get(), 1);
    return inf;
}

}  // namespace

PrecisionBudget inner_budget(int digits, int attempt) {
    PrecisionBudget b = PrecisionBudget::for_digits(digits + 10);
    b.working_bits <<= attempt;
    return b;
}

SeriesSum sum_series(const std::vector<SubSeries>& parts, const BigFloat& tail_allowance, std::uint64_t max_terms,
                     bool trace, Bits bits) {
    BigFloat share(kRadiusBits);
    mpfr_div_ui(share.get(), tail_allowance.get(), static_cast<unsigned long>(parts.size()), MPFR_RNDD);
    const BigFloat half = BigFloat::pow2(-1);

    SeriesSum out;
    out.value = Ball(bits);
    std::vector<PartState> state(parts.size(), PartState{Ball(bits), infinity()});
    for (std::uint64_t i = 0;; ++i) {
        bool any_active = false;
        Ball row_term(bits);
        for (std::size_t p = 0; p < parts.size(); ++p) {
            PartState& st = state[p];
            if (st.done) continue;
            any_active = true;
            const SubSeries& part = parts[p];
            const std::uint64_t n = part.start + i;
            const SeriesTerm t = part.term(n);
            st.sum += t.value;
            row_term += t.value;
            ++st.count;
            ++out.terms;

            const BigFloat next_upper = mul_up(part.ratio, t.upper);
            st.tail = infinity();
            if (next_upper <= half) {
                st.tail = tail_bound(next_upper, part.ratio);
                if (st.tail <= share) {
                    st.done = true;
                    continue;
                }
            }
            const std::uint64_t limit = part.analytic_tail ? std::min(max_terms, kExplicitTermCap) : max_terms;
            if (st.count < limit) continue;
            if (part.analytic_tail) {
                if (auto tail = part.analytic_tail(n + 1, share)) {
                    st.sum += tail->value;
                    st.tail = tail->remainder;
                    st.done = true;
                    out.tail_method = "analytic";
                    continue;
                }
            }
            throw TruncationFailure(part.label + ": tail bound not reached within " + std::to_string(limit) +
                                    " terms");
        }
        if (!any_active) break;
        if (trace) {
            Ball partial(bits);
            BigFloat tail(kRadiusBits);
            for (const PartState& st : state) {
                partial += st.sum;
                tail = add_up(tail, st.tail);
            }
            out.trace.push_back(TraceRow{parts.front().start + i, row_term, partial, tail});
        }
    }
    out.tail = BigFloat(kRadiusBits);
    for (const PartState& st : state) {
        out.value += st.sum;
        out.tail = add_up(out.tail, st.tail);
    }
    return out;
}

IdentityReport verify_series(const std::string& identity_id, std::map<std::string, std::string> parameters,
                             const VerifyOptions& options,
                             const std::function<SeriesIdentity(const PrecisionBudget& inner)>& build) {
    IdentityReport report;
    report.identity_id = identity_id;
    report.parameters = std::move(parameters);
    report.digits = options.digits;

    const BigFloat tol = PrecisionBudget::for_digits(options.digits).tolerance();
    BigFloat half_tol(kRadiusBits);
    mpfr_div_2ui(half_tol.get(), tol.get(), 1, MPFR_RNDD);

    std::string failure;
    for (int attempt = 0; attempt <= kMaxEscalations; ++attempt) {
        const PrecisionBudget inner = inner_budget(options.digits, attempt);
        try {
            SeriesIdentity id = build(inner);
            SeriesSum sum = sum_series(id.parts, half_tol, options.max_terms, options.trace, inner.working_bits);
            report.lhs = sum.value;
            report.rhs = id.rhs;
            report.tail_bound = sum.tail;
            report.terms_used = sum.terms;
            report.residual = report.lhs - report.rhs;
            report.trace = std::move(sum.trace);
            for (auto& [k, v] : id.notes) report.parameters[k] = v;
            report.parameters["tail_method"] = sum.tail_method;
            if (add_up(report.lhs.radius(), report.rhs.radius()) > half_tol) {
                failure = "enclosure radius above 10^-" + std::to_string(options.digits) + " / 2";
                continue;
            }
            report.verdict = id.checks_ok && within_tolerance(report.residual, report.tail_bound, options.digits)
                                 ? Verdict::pass
                                 : Verdict::fail;
            return report;
        } catch (const PrecisionFailure& e) {
            failure = e.what();
        } catch (const TruncationFailure& e) {
            report.parameters["failure"] = e.what();
            report.verdict = Verdict::fail;
            return report;
        }
    }
    report.parameters["failure"] = "precision: " + failure;
    report.verdict = Verdict::fail;
    return report;
}

}  // namespace dilog
