#include <atomic>
#include <thread>

#include "dyadic/universality.hpp"

namespace dyadic {

Oracle::Oracle(int k, bool classic, const Field& F)
    : k_(k), classic_(classic), F_(F), tests_(classic ? enumerate_classic_basic(k, F) : enumerate_dominant(k, F)) {
    for (const auto& t : tests_) profiles_.emplace_back(t, F);
}

ClassifyVerdict Oracle::evaluate(const JordanLattice& L) const {
    if (!is_integral(L)) throw DomainError("lattice is not integral");
    if (classic_ && !is_classic(L)) throw DomainError("lattice is not classic");
    const LatticeProfile P(L, F_);
    for (std::size_t i = 0; i < tests_.size(); ++i) {
        RepVerdict v = represents_lattice(profiles_[i], P, F_);
        if (!v.represented())
            return {false, "oracle: " + describe(tests_[i], F_) + " not represented (" + v.reason + ")", tests_[i]};
    }
    return {true, "oracle: all " + std::to_string(tests_.size()) + " test lattices of dimension " +
                      std::to_string(k_) + " represented",
            std::nullopt};
}

ClassifyVerdict oracle_k_universal(const JordanLattice& L, int k, bool classic, const Field& F) {
    if (k < 1) throw DomainError("k must be positive");
    return Oracle(k, classic, F).evaluate(L);
}

namespace {

constexpr std::size_t kChunk = 4096;

void process_chunk(std::vector<CrosscheckRecord>& chunk, const Oracle& oracle, const CrosscheckOptions& opts,
                   const Field& F) {
    const int jobs = std::max(1, opts.jobs);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < chunk.size(); i = next++) {
            CrosscheckRecord& r = chunk[i];
            r.classifier = classify(r.lattice, opts.k, opts.classic, F);
            r.oracle = oracle.evaluate(r.lattice);
            r.agree = r.classifier.value == r.oracle.value;
        }
    };
    if (jobs == 1) {
        work();
        return;
    }
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(work);
    for (auto& t : pool) t.join();
}

}  // namespace

CrosscheckReport crosscheck(const FamilyBounds& b, const CrosscheckOptions& opts, const Field& F) {
    if (opts.k < 1) throw DomainError("k must be positive");
    const Oracle oracle(opts.k, opts.classic, F);
    FamilyBounds bounds = b;
    bounds.classic = opts.classic;
    CrosscheckReport report;
    std::vector<CrosscheckRecord> chunk;
    auto flush = [&] {
        process_chunk(chunk, oracle, opts, F);
        for (auto& r : chunk) {
            ++report.total;
            if (r.agree)
                ++report.agreements;
            else
                report.disagreements.push_back(r);
            if (opts.sink) opts.sink(r);
        }
        chunk.clear();
    };
    auto push = [&](const JordanLattice& L) {
        chunk.push_back({L, {}, {}, false});
        if (chunk.size() >= kChunk) flush();
    };
    if (opts.sample) {
        for (const auto& L : sample_family(bounds, *opts.sample, opts.seed, F)) push(L);
    } else {
        for_each_in_family(bounds, F, push);
    }
    flush();
    return report;
}

}  // namespace dyadic
