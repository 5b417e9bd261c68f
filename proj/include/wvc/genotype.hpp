#ifndef WVC_GENOTYPE_HPP
#define WVC_GENOTYPE_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wvc {

/// Bitstring x in {0,1}^n; bit i selects vertex i.
class Genotype {
public:
    Genotype() = default;
    explicit Genotype(std::size_t n, bool value = false)
        : size_(n), words_((n + 63) / 64, value ? ~std::uint64_t{0} : 0)
    {
        trim();
    }

    /// Parses a string of '0'/'1' characters; character i is bit i.
    static auto from_string(std::string_view bits) -> Genotype
    {
        Genotype x(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] == '1') {
                x.set(i, true);
            } else if (bits[i] != '0') {
                throw std::invalid_argument("genotype string may only contain '0' and '1'");
            }
        }
        return x;
    }

    [[nodiscard]] auto size() const noexcept -> std::size_t { return size_; }

    [[nodiscard]] auto test(std::size_t i) const noexcept -> bool
    {
        return (words_[i >> 6] >> (i & 63)) & 1U;
    }
    [[nodiscard]] auto operator[](std::size_t i) const noexcept -> bool { return test(i); }

    void set(std::size_t i, bool value) noexcept
    {
        auto const mask = std::uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    /// Number of one-bits, |x|_1.
    [[nodiscard]] auto count() const noexcept -> std::size_t
    {
        std::size_t c = 0;
        for (auto w : words_) { c += static_cast<std::size_t>(std::popcount(w)); }
        return c;
    }
    [[nodiscard]] auto none() const noexcept -> bool
    {
        for (auto w : words_) {
            if (w != 0) { return false; }
        }
        return true;
    }

    [[nodiscard]] auto to_string() const -> std::string
    {
        std::string s(size_, '0');
        for (std::size_t i = 0; i < size_; ++i) {
            if (test(i)) { s[i] = '1'; }
        }
        return s;
    }

    [[nodiscard]] auto words() const noexcept -> std::vector<std::uint64_t> const& { return words_; }

    friend auto operator==(Genotype const&, Genotype const&) -> bool = default;

    /// Lexicographic order on (x_0, x_1, ..., x_{n-1}) with 0 < 1.
    [[nodiscard]] auto lex_less(Genotype const& other) const noexcept -> bool
    {
        for (std::size_t i = 0; i < size_ && i < other.size_; ++i) {
            if (test(i) != other.test(i)) { return !test(i); }
        }
        return size_ < other.size_;
    }

private:
    void trim() noexcept
    {
        if (auto r = size_ & 63; r != 0 && !words_.empty()) {
            words_.back() &= (std::uint64_t{1} << r) - 1;
        }
    }

    std::size_t size_{0};
    std::vector<std::uint64_t> words_;
};

struct GenotypeHash {
    auto operator()(Genotype const& x) const noexcept -> std::size_t
    {
        // splitmix-style finalizer folded over the words
        std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ x.size();
        for (auto w : x.words()) {
            h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
            h = (h ^ (h >> 30)) * 0xBF58476D1CE4E5B9ULL;
            h = (h ^ (h >> 27)) * 0x94D049BB133111EBULL;
            h ^= h >> 31;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace wvc

#endif
