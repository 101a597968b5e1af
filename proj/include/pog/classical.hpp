#pragma once

// Exhaustive search over deterministic classical strategies for the game,
// restricted to encoders that reveal nothing about the parity class of
// (x, a). Establishes the ceiling 13/18 for the success probability of
// such strategies by brute force, in exact integer arithmetic.

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "pog/game.hpp"

namespace pog {

// Exact fraction with a canonical (reduced, positive-denominator) form.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational of(long long n, long long d) {
        if (d == 0) throw std::invalid_argument("zero denominator");
        if (d < 0) { n = -n; d = -d; }
        const long long g = std::gcd(n < 0 ? -n : n, d);
        return {g ? n / g : n, g ? d / g : d};
    }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
};

// encoder: (x, a) -> message in {0, ..., d-1}, indexed as 2(x-1)+a.
// decoder: (message, y) -> bit, indexed as 3*message + (y-1).
struct ClassicalStrategy {
    int d = 1;
    std::array<int, 6> encoder{};
    std::array<int, 18> decoder{};

    int encode(int x, int a) const { return encoder[2 * (x - 1) + a]; }
    int decode(int m, int y) const { return decoder[3 * m + (y - 1)]; }
};

// The encoder leaks no parity information iff every message is emitted by
// as many even-class inputs as odd-class ones (each class has 3 members,
// so the message distributions conditioned on the class coincide).
inline bool is_parity_oblivious(const ClassicalStrategy& s,
                                ParityConvention conv = kParityConvention) {
    std::array<int, 6> balance{};
    for (int x = 1; x <= 3; ++x) {
        for (int a = 0; a <= 1; ++a) {
            const int m = s.encode(x, a);
            if (m < 0 || m >= s.d) throw std::invalid_argument("encoder message out of range");
            balance[m] += parity_class(x, a, conv) == Parity::even ? 1 : -1;
        }
    }
    for (int m = 0; m < s.d; ++m) {
        if (balance[m] != 0) return false;
    }
    return true;
}

// Exact success probability: wins over the 18 uniformly weighted triples.
inline Rational strategy_success(const ClassicalStrategy& s) {
    int wins = 0;
    for (int x = 1; x <= 3; ++x) {
        for (int a = 0; a <= 1; ++a) {
            for (int y = 1; y <= 3; ++y) {
                wins += s.decode(s.encode(x, a), y) == winning_output(x, a, y) ? 1 : 0;
            }
        }
    }
    return Rational::of(wins, 18);
}

// Deterministic conditional table of a strategy, for cross-checking the
// exact count against the game-core success functional.
inline ConditionalTable to_conditional_table(const ClassicalStrategy& s) {
    ConditionalTable out;
    for (int x = 1; x <= 3; ++x) {
        for (int a = 0; a <= 1; ++a) {
            for (int y = 1; y <= 3; ++y) {
                out.at(x, a, y) = s.decode(s.encode(x, a), y) == 0 ? 1.0 : 0.0;
            }
        }
    }
    return out;
}

struct OracleResult {
    Rational max_success{0, 1};
    std::vector<ClassicalStrategy> argmax;
    long long strategies_searched = 0;
};

namespace detail {

// Per-(message, y) tally of how many inputs mapped to that message want
// each output bit. The total win count decomposes as a sum over these
// cells, so choosing the majority bit per cell is exactly optimal for a
// given encoder (no decoder choice in one cell affects another).
inline void fill_greedy_decoder(const std::array<int, 6>& encoder, int d,
                                std::array<int, 18>& decoder, int& wins) {
    std::array<std::array<int, 2>, 18> count{};  // [3m + (y-1)][b]
    for (int x = 1; x <= 3; ++x) {
        for (int a = 0; a <= 1; ++a) {
            const int m = encoder[2 * (x - 1) + a];
            for (int y = 1; y <= 3; ++y) {
                ++count[3 * m + (y - 1)][winning_output(x, a, y)];
            }
        }
    }
    wins = 0;
    decoder.fill(0);
    for (int m = 0; m < d; ++m) {
        for (int y = 1; y <= 3; ++y) {
            const auto& c = count[3 * m + (y - 1)];
            decoder[3 * m + (y - 1)] = c[1] > c[0] ? 1 : 0;
            wins += c[0] >= c[1] ? c[0] : c[1];
        }
    }
}

}  // namespace detail

// Brute force over all d^6 encoders; parity-revealing encoders are
// discarded, the rest are scored with their exact optimal decoder.
inline OracleResult enumerate_max(int d, ParityConvention conv = kParityConvention) {
    if (d < 1 || d > 6) throw std::invalid_argument("alphabet size must be in [1, 6]");
    OracleResult result;
    int best_wins = -1;
    ClassicalStrategy s;
    s.d = d;
    long long total = 1;
    for (int i = 0; i < 6; ++i) total *= d;
    for (long long code = 0; code < total; ++code) {
        long long rest = code;
        for (int i = 0; i < 6; ++i) {
            s.encoder[i] = static_cast<int>(rest % d);
            rest /= d;
        }
        ++result.strategies_searched;
        if (!is_parity_oblivious(s, conv)) continue;
        int wins = 0;
        detail::fill_greedy_decoder(s.encoder, d, s.decoder, wins);
        if (wins > best_wins) {
            best_wins = wins;
            result.argmax.clear();
        }
        if (wins == best_wins) result.argmax.push_back(s);
    }
    result.max_success = Rational::of(best_wins, 18);
    return result;
}

// Independent slow route: enumerate every decoder as well, scoring each
// full strategy by direct counting. Exponential in d; intended for
// cross-validating the greedy decoder on small alphabets.
inline Rational enumerate_max_full_decoders(int d, ParityConvention conv = kParityConvention) {
    if (d < 1 || d > 3) throw std::invalid_argument("full decoder search supports d in [1, 3]");
    ClassicalStrategy s;
    s.d = d;
    long long total = 1;
    for (int i = 0; i < 6; ++i) total *= d;
    Rational best{0, 1};
    for (long long code = 0; code < total; ++code) {
        long long rest = code;
        for (int i = 0; i < 6; ++i) {
            s.encoder[i] = static_cast<int>(rest % d);
            rest /= d;
        }
        if (!is_parity_oblivious(s, conv)) continue;
        const int decoder_bits = 3 * d;
        for (std::uint32_t mask = 0; mask < (1u << decoder_bits); ++mask) {
            for (int i = 0; i < decoder_bits; ++i) s.decoder[i] = (mask >> i) & 1u;
            const Rational r = strategy_success(s);
            if (best < r) best = r;
        }
    }
    return best;
}

}  // namespace pog
