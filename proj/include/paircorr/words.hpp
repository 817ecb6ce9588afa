#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "paircorr/errors.hpp"

namespace paircorr {

// Finite word over the alphabet {0, ..., alphabet_size-1}.
struct Word {
    unsigned alphabet_size = 2;
    std::vector<unsigned> symbols;

    Word() = default;
    Word(unsigned k, std::vector<unsigned> syms);
    std::size_t size() const { return symbols.size(); }
};

// Non-cyclic de Bruijn word of order m: length k^m + m - 1, every length-m
// word over the alphabet occurs exactly once as a window. Deterministic:
// the lexicographically least de Bruijn cycle (Lyndon-word concatenation)
// followed by its first m-1 symbols.
Word de_bruijn_word(unsigned k, unsigned m);

// Word of length k^M + M - 1 whose prefix of length k^m + m - 1 is a
// de Bruijn word of order m for every applicable order m <= M
// (every m for k >= 3, every odd m for k == 2; M must be odd for k == 2).
// Built by Eulerian-path completion order by order.
Word infinite_de_bruijn_prefix(unsigned k, unsigned max_order);

// Window-enumeration check, independent of the construction above.
bool verify_de_bruijn(const Word& w, unsigned m);

// Deterministic on-demand digit source for a real alpha = 0.a1 a2 a3 ...
// in the given base. digit(i) is the 0-based digit a_{i+1} and is a pure
// function of i. Finite sources expose their length.
class DigitStream {
  public:
    DigitStream(unsigned base, std::function<unsigned(std::uint64_t)> digit_fn,
                std::optional<std::uint64_t> length, std::string descriptor);

    unsigned base() const { return base_; }
    unsigned digit(std::uint64_t position) const;
    std::optional<std::uint64_t> length() const { return length_; }
    const std::string& descriptor() const { return descriptor_; }

  private:
    unsigned base_;
    std::function<unsigned(std::uint64_t)> digit_fn_;
    std::optional<std::uint64_t> length_;
    std::string descriptor_;
};

// 0.(1)(2)(3)... with the base-b representations of 1,2,3,... concatenated.
DigitStream champernowne_stream(unsigned base);

// The word's symbols, then pad forever; base = alphabet size.
DigitStream word_stream(const Word& w, unsigned pad);

// digits repeated forever.
DigitStream periodic_stream(unsigned base, std::vector<unsigned> digits);

// Finite stream; reading past the end raises InsufficientDigitsError.
DigitStream literal_stream(unsigned base, std::vector<unsigned> digits);

}  // namespace paircorr
