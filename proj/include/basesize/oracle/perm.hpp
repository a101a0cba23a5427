#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace basesize::oracle {

/// A permutation of {0, ..., d-1}, stored as its image vector.
class Perm {
public:
    Perm() = default;
    /// Throws InputError unless `images` is a bijection on {0..size-1}.
    explicit Perm(std::vector<std::uint32_t> images);

    static Perm identity(std::size_t degree);

    /// Parses 1-based cycle notation such as "(1,2)(3,4,5)". The degree is
    /// `degree`, or the largest point mentioned when `degree` is 0. "()" is
    /// the identity.
    static Perm from_cycles(std::string_view text, std::size_t degree = 0);

    std::size_t degree() const { return images_.size(); }
    std::uint32_t operator[](std::size_t x) const { return images_[x]; }
    std::span<const std::uint32_t> images() const { return images_; }

    bool is_identity() const;
    Perm inverse() const;
    /// +1 for even permutations, -1 for odd.
    int sign() const;
    /// 1-based cycle notation, fixed points omitted; "()" for the identity.
    std::string to_cycles() const;

    /// Left-to-right product: (a * b)(x) = b(a(x)).
    friend Perm operator*(const Perm& a, const Perm& b);
    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    std::vector<std::uint32_t> images_;
};

struct PermHash {
    std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace basesize::oracle
