/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CLIQUELAB_GUARD_SRC_BITSET_HH
#define CLIQUELAB_GUARD_SRC_BITSET_HH 1

#include <bit>
#include <cstdint>
#include <vector>

namespace cliquelab
{
    /* Fixed-width bitset over 64-bit words. The width is chosen at
       construction and never changes; binary operations require both
       operands to have the same width. Bits above the width are kept zero,
       so equality is plain word comparison. */
    class Bitset
    {
        private:
            int width_ = 0;
            std::vector<std::uint64_t> words_;

        public:
            Bitset() = default;

            explicit Bitset(int width) :
                width_(width),
                words_((width + 63) / 64, 0)
            {
            }

            static auto filled(int width) -> Bitset
            {
                Bitset result(width);
                for (int b = 0 ; b < width ; ++b)
                    result.set(b);
                return result;
            }

            auto width() const -> int
            {
                return width_;
            }

            auto set(int b) -> void
            {
                words_[b >> 6] |= (std::uint64_t{ 1 } << (b & 63));
            }

            auto reset(int b) -> void
            {
                words_[b >> 6] &= ~(std::uint64_t{ 1 } << (b & 63));
            }

            auto test(int b) const -> bool
            {
                return words_[b >> 6] & (std::uint64_t{ 1 } << (b & 63));
            }

            auto count() const -> int
            {
                int result = 0;
                for (auto & w : words_)
                    result += std::popcount(w);
                return result;
            }

            auto any() const -> bool
            {
                for (auto & w : words_)
                    if (w)
                        return true;
                return false;
            }

            auto empty() const -> bool
            {
                return ! any();
            }

            auto intersects(const Bitset & other) const -> bool
            {
                for (unsigned i = 0 ; i < words_.size() ; ++i)
                    if (words_[i] & other.words_[i])
                        return true;
                return false;
            }

            auto operator&= (const Bitset & other) -> Bitset &
            {
                for (unsigned i = 0 ; i < words_.size() ; ++i)
                    words_[i] &= other.words_[i];
                return *this;
            }

            friend auto operator& (Bitset a, const Bitset & b) -> Bitset
            {
                a &= b;
                return a;
            }

            auto operator== (const Bitset &) const -> bool = default;

            template <typename F_>
            auto for_each(F_ && f) const -> void
            {
                for (unsigned i = 0 ; i < words_.size() ; ++i) {
                    auto w = words_[i];
                    while (w) {
                        int b = std::countr_zero(w);
                        f(int(i) * 64 + b);
                        w &= w - 1;
                    }
                }
            }

            auto to_vector() const -> std::vector<int>
            {
                std::vector<int> result;
                for_each([&] (int b) { result.push_back(b); });
                return result;
            }
    };
}

#endif
