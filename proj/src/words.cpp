#include "paircorr/words.hpp"

#include <algorithm>
#include <memory>
#include <utility>

namespace paircorr {

namespace {

constexpr std::uint64_t kMaxWordSymbols = 1ull << 25;  // word-length budget

// k^m, guarded against the symbol budget.
std::uint64_t checked_power(unsigned k, unsigned m) {
    std::uint64_t p = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (p > kMaxWordSymbols / k)
            throw ResourceLimitError("de Bruijn word of this order exceeds the size budget");
        p *= k;
    }
    return p;
}

void validate_alphabet(unsigned k) {
    if (k < 2) throw InvalidParamsError("alphabet size must be >= 2");
}

// Lexicographically least de Bruijn cycle of order m (FKM algorithm:
// concatenation of the Lyndon words over {0..k-1} with length dividing m).
std::vector<unsigned> de_bruijn_cycle(unsigned k, unsigned m) {
    std::vector<unsigned> a(m + 1, 0);
    std::vector<unsigned> seq;
    auto rec = [&](auto&& self, unsigned t, unsigned p) -> void {
        if (t > m) {
            if (m % p == 0)
                for (unsigned j = 1; j <= p; ++j) seq.push_back(a[j]);
            return;
        }
        a[t] = a[t - p];
        self(self, t + 1, p);
        for (unsigned j = a[t - p] + 1; j < k; ++j) {
            a[t] = j;
            self(self, t + 1, t);
        }
    };
    rec(rec, 1, 1);
    return seq;
}

// Extends a de Bruijn word of some lower order to order m by completing the
// Eulerian path over the order-m window graph (nodes are (m-1)-grams, edges
// are m-grams; the existing windows of `w` are the forced initial walk).
Word extend_to_order(const Word& w, unsigned m) {
    const unsigned k = w.alphabet_size;
    const std::uint64_t edges = checked_power(k, m);
    const std::uint64_t nodes = edges / k;

    std::vector<std::uint32_t> used(nodes, 0);  // per-node bitmask over symbols
    if (k > 31) throw ResourceLimitError("alphabet too large for edge masks");

    // mark the windows of the existing word as used edges
    std::uint64_t node = 0;
    for (unsigned i = 0; i + 1 < m; ++i) node = node * k + w.symbols[i];
    std::uint64_t used_count = 0;
    for (std::size_t i = m - 1; i < w.size(); ++i) {
        const unsigned c = w.symbols[i];
        if (used[node] & (1u << c))
            throw ConstructionFailedError("prefix repeats an order-m window");
        used[node] |= 1u << c;
        ++used_count;
        node = (node * k + c) % nodes;
    }

    // Hierholzer from the node spelled by the last m-1 symbols; emitting on
    // backtrack and reversing yields the remaining Eulerian path.
    std::vector<std::pair<std::uint64_t, unsigned>> stack;  // (node, incoming symbol)
    std::vector<unsigned> out;
    out.reserve(edges - used_count);
    stack.emplace_back(node, k);  // sentinel symbol for the start
    while (!stack.empty()) {
        const std::uint64_t u = stack.back().first;
        unsigned c = 0;
        while (c < k && (used[u] & (1u << c))) ++c;
        if (c < k) {
            used[u] |= 1u << c;
            stack.emplace_back((u * k + c) % nodes, c);
        } else {
            if (stack.back().second < k) out.push_back(stack.back().second);
            stack.pop_back();
        }
    }
    if (out.size() != edges - used_count)
        throw ConstructionFailedError("Eulerian completion left unreachable windows");
    std::reverse(out.begin(), out.end());

    Word r = w;
    r.symbols.insert(r.symbols.end(), out.begin(), out.end());
    return r;
}

}  // namespace

Word::Word(unsigned k, std::vector<unsigned> syms)
    : alphabet_size(k), symbols(std::move(syms)) {
    validate_alphabet(k);
    for (unsigned s : symbols)
        if (s >= k) throw InvalidParamsError("word symbol outside the alphabet");
}

Word de_bruijn_word(unsigned k, unsigned m) {
    validate_alphabet(k);
    if (m == 0) throw InvalidParamsError("order must be positive");
    checked_power(k, m);
    std::vector<unsigned> cycle = de_bruijn_cycle(k, m);
    std::vector<unsigned> syms = cycle;
    syms.insert(syms.end(), cycle.begin(), cycle.begin() + (m - 1));
    return Word(k, std::move(syms));
}

Word infinite_de_bruijn_prefix(unsigned k, unsigned max_order) {
    validate_alphabet(k);
    if (max_order == 0) throw InvalidParamsError("max order must be positive");
    if (k == 2 && max_order % 2 == 0)
        throw InvalidParamsError("binary infinite de Bruijn prefixes exist for odd orders only");
    checked_power(k, max_order);

    Word w = de_bruijn_word(k, 1);
    const unsigned step = (k == 2) ? 2 : 1;
    for (unsigned m = 1 + step; m <= max_order; m += step) w = extend_to_order(w, m);

    for (unsigned m = 1; m <= max_order; m += step) {
        Word prefix(k, std::vector<unsigned>(
                           w.symbols.begin(),
                           w.symbols.begin() + (checked_power(k, m) + m - 1)));
        if (!verify_de_bruijn(prefix, m))
            throw ConstructionFailedError("constructed prefix fails order " + std::to_string(m));
    }
    return w;
}

bool verify_de_bruijn(const Word& w, unsigned m) {
    if (m == 0) return false;
    const unsigned k = w.alphabet_size;
    std::uint64_t windows = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (windows > (kMaxWordSymbols << 4) / k) return false;  // cannot match |w| anyway
        windows *= k;
    }
    if (w.size() != windows + m - 1) return false;

    std::vector<bool> seen(windows, false);
    std::uint64_t code = 0;
    const std::uint64_t drop = windows / k;  // k^(m-1)
    for (std::size_t i = 0; i < w.size(); ++i) {
        code = (code % drop) * k + w.symbols[i];
        if (i + 1 >= m) {
            if (seen[code]) return false;
            seen[code] = true;
        }
    }
    return true;  // `windows` windows, pairwise distinct, hence all present
}

DigitStream::DigitStream(unsigned base, std::function<unsigned(std::uint64_t)> digit_fn,
                         std::optional<std::uint64_t> length, std::string descriptor)
    : base_(base), digit_fn_(std::move(digit_fn)), length_(length),
      descriptor_(std::move(descriptor)) {
    if (base_ < 2) throw InvalidParamsError("digit stream base must be >= 2");
}

unsigned DigitStream::digit(std::uint64_t position) const {
    if (length_ && position >= *length_)
        throw InsufficientDigitsError("digit stream exhausted at position " +
                                      std::to_string(position));
    const unsigned d = digit_fn_(position);
    if (d >= base_) throw InvalidParamsError("digit stream produced an out-of-base digit");
    return d;
}

DigitStream champernowne_stream(unsigned base) {
    if (base < 2) throw InvalidParamsError("base must be >= 2");
    auto fn = [base](std::uint64_t pos) -> unsigned {
        // locate the block of d-digit integers containing position pos
        std::uint64_t remaining = pos;
        std::uint64_t d = 1;
        std::uint64_t block_start = 1;  // b^(d-1), first d-digit integer
        for (;;) {
            const std::uint64_t numbers = block_start * (base - 1);
            // digits in this block = d * numbers; guard against overflow
            if (numbers != 0 && remaining / d < numbers) break;
            remaining -= d * numbers;
            ++d;
            block_start *= base;
        }
        const std::uint64_t number = block_start + remaining / d;
        const std::uint64_t offset = remaining % d;  // 0 = most significant digit
        std::uint64_t v = number;
        for (std::uint64_t i = 0; i + 1 < d - offset; ++i) v /= base;
        return static_cast<unsigned>(v % base);
    };
    return DigitStream(base, fn, std::nullopt, "champernowne:" + std::to_string(base));
}

DigitStream word_stream(const Word& w, unsigned pad) {
    if (pad >= w.alphabet_size) throw InvalidParamsError("pad symbol outside the alphabet");
    auto syms = std::make_shared<std::vector<unsigned>>(w.symbols);
    auto fn = [syms, pad](std::uint64_t pos) -> unsigned {
        return pos < syms->size() ? (*syms)[pos] : pad;
    };
    return DigitStream(w.alphabet_size, fn, std::nullopt,
                       "word[" + std::to_string(w.size()) + "]," + std::to_string(pad));
}

DigitStream periodic_stream(unsigned base, std::vector<unsigned> digits) {
    if (digits.empty()) throw InvalidParamsError("periodic stream needs at least one digit");
    auto d = std::make_shared<std::vector<unsigned>>(std::move(digits));
    auto fn = [d](std::uint64_t pos) -> unsigned { return (*d)[pos % d->size()]; };
    return DigitStream(base, fn, std::nullopt, "periodic[" + std::to_string(d->size()) + "]");
}

DigitStream literal_stream(unsigned base, std::vector<unsigned> digits) {
    auto d = std::make_shared<std::vector<unsigned>>(std::move(digits));
    auto fn = [d](std::uint64_t pos) -> unsigned { return (*d)[pos]; };
    return DigitStream(base, fn, d->size(), "literal[" + std::to_string(d->size()) + "]");
}

}  // namespace paircorr
