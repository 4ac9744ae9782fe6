#include "qrsort/selfcheck.hpp"

#include <algorithm>
#include <span>
#include <vector>

#include "qrsort/keys.hpp"
#include "qrsort/prng.hpp"
#include "qrsort/qr_sort.hpp"

namespace qrsort {

namespace {

Element draw(Xoshiro256ss& rng, Element lo, Element hi) {
    const auto width = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return static_cast<Element>(static_cast<std::uint64_t>(lo) + rng.bounded(width));
}

std::vector<Element> random_array(Xoshiro256ss& rng, std::size_t n, Element lo, Element hi) {
    std::vector<Element> a(n);
    for (auto& v : a) v = draw(rng, lo, hi);
    return a;
}

} // namespace

std::vector<PropertyReport> run_selftest(std::uint64_t cases, std::uint64_t seed) {
    Xoshiro256ss rng(seed);
    PropertyReport lemma{"lemma: s_i < s_j and r_i >= r_j implies q_i < q_j"};
    PropertyReport rebuild{"reconstruction: d*q + r = s - min"};
    PropertyReport bitwise{"bitwise keys equal general keys"};
    PropertyReport subfree{"subtraction-free sort equals general sort"};

    for (std::uint64_t c = 0; c < cases; ++c) {
        const std::size_t n = 2 + rng.bounded(15);
        const auto a = random_array(rng, n, -1'000'000, 1'000'000);
        const std::uint64_t d = 1 + rng.bounded(2'000);
        CostLedger ledger;
        const std::span<const Element> s(a);
        const KeySeq r = compute_remainder_keys(s, d, QrKeyMode::general(), ledger);
        const KeySeq q = compute_quotient_keys(s, d, QrKeyMode::general(), ledger);
        const Element lo = *std::min_element(a.begin(), a.end());

        ++lemma.cases;
        ++rebuild.cases;
        bool lemma_ok = true, rebuild_ok = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (d * q.keys[i] + r.keys[i] != key_offset(a[i], lo)) rebuild_ok = false;
            for (std::size_t j = 0; j < n; ++j)
                if (a[i] < a[j] && r.keys[i] >= r.keys[j] && !(q.keys[i] < q.keys[j]))
                    lemma_ok = false;
        }
        lemma.violations += !lemma_ok;
        rebuild.violations += !rebuild_ok;

        const unsigned shift = static_cast<unsigned>(rng.bounded(31));
        const std::uint64_t pd = std::uint64_t{1} << shift;
        const auto big = random_array(rng, 64, -(Element{1} << 40), Element{1} << 40);
        const std::span<const Element> bs(big);
        ++bitwise.cases;
        const bool keys_equal =
            compute_remainder_keys(bs, pd, QrKeyMode::bitwise(shift), ledger).keys ==
                compute_remainder_keys(bs, pd, QrKeyMode::general(), ledger).keys &&
            compute_quotient_keys(bs, pd, QrKeyMode::bitwise(shift), ledger).keys ==
                compute_quotient_keys(bs, pd, QrKeyMode::general(), ledger).keys;
        bitwise.violations += !keys_equal;

        auto nonneg = random_array(rng, n, 0, 100'000);
        auto general = nonneg;
        const std::uint64_t sd = 1 + rng.bounded(400);
        qr_sort_inplace(std::span(nonneg), sd, QrKeyMode::subtraction_free(), ledger);
        qr_sort_inplace(std::span(general), sd, QrKeyMode::general(), ledger);
        ++subfree.cases;
        subfree.violations += nonneg != general;
    }
    return {lemma, rebuild, bitwise, subfree};
}

} // namespace qrsort
