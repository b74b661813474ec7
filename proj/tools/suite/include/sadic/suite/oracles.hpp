#pragma once

// Brute-force references. They share no code paths with the library beyond
// Morphism images, and trade speed for being obviously right.

#include <cstdint>
#include <set>
#include <vector>

#include "sadic/sequence.hpp"

namespace sadic::oracle {

// Factors of length len of L^{(n)}: read the images tau_[n,N)(a) letter by letter
// (prefixes capped at `cap` letters) for growing N until two consecutive N agree.
std::set<Word> stream_language(const DirectiveSequence& seq, std::size_t n, std::size_t len,
                               std::uint64_t cap = std::uint64_t{1} << 26);
// Words of every length 1..len, from the factors of length len.
std::vector<std::set<Word>> shorter_factors(const std::set<Word>& top, std::size_t len);

// Factors of length n of sigma(tau(u)) over all u of length m.
std::set<Word> full_shift_factors(const Morphism& sigma, const Morphism& tau, std::size_t m, std::size_t n);

// F(b, n) read off the definition: factors b.w of tau(u), u of length i, with w_1 != b and
// |sigma(w without its last letter)| < n <= |sigma(w)|.
std::vector<std::set<Word>> f_sets(const Morphism& sigma, const Morphism& tau, std::size_t i, std::uint64_t n);

// Maximal constant blocks over all images.
std::uint64_t block_count(const Morphism& tau);

// Every factorization of a window into W-words, with a partial head and tail allowed.
std::uint64_t count_factorizations(const Word& window, const std::vector<Word>& W);

}  // namespace sadic::oracle
