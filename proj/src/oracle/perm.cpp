#include "basesize/oracle/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "basesize/errors.hpp"

namespace basesize::oracle {

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto y : images_) {
        if (y >= images_.size() || seen[y]) throw InputError("image vector is not a permutation");
        seen[y] = true;
    }
}

Perm Perm::identity(std::size_t degree) {
    std::vector<std::uint32_t> images(degree);
    std::iota(images.begin(), images.end(), 0u);
    Perm p;
    p.images_ = std::move(images);
    return p;
}

Perm Perm::from_cycles(std::string_view text, std::size_t degree) {
    std::vector<std::vector<std::uint32_t>> cycles;
    std::size_t i = 0;
    std::size_t max_point = 0;
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_space();
    while (i < text.size()) {
        if (text[i] != '(') throw InputError("expected '(' in cycle notation: " + std::string(text));
        ++i;
        std::vector<std::uint32_t> cycle;
        skip_space();
        while (i < text.size() && text[i] != ')') {
            std::size_t value = 0;
            std::size_t digits = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                value = value * 10 + static_cast<std::size_t>(text[i] - '0');
                ++i;
                ++digits;
                if (value > 1'000'000) throw InputError("point too large in cycle notation");
            }
            if (digits == 0 || value == 0) {
                throw InputError("expected a positive point in cycle notation: " + std::string(text));
            }
            cycle.push_back(static_cast<std::uint32_t>(value - 1));
            max_point = std::max(max_point, value);
            skip_space();
            if (i < text.size() && text[i] == ',') {
                ++i;
                skip_space();
            }
        }
        if (i >= text.size()) throw InputError("unterminated cycle: " + std::string(text));
        ++i;
        cycles.push_back(std::move(cycle));
        skip_space();
    }

    if (degree == 0) degree = max_point;
    if (max_point > degree) throw InputError("cycle point exceeds degree");
    std::vector<std::uint32_t> images(degree);
    std::iota(images.begin(), images.end(), 0u);
    std::vector<bool> moved(degree, false);
    for (const auto& c : cycles) {
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (moved[c[j]]) throw InputError("point repeated in cycle notation: " + std::string(text));
            moved[c[j]] = true;
            images[c[j]] = c[(j + 1) % c.size()];
        }
    }
    return Perm(std::move(images));
}

bool Perm::is_identity() const {
    for (std::size_t x = 0; x < images_.size(); ++x) {
        if (images_[x] != x) return false;
    }
    return true;
}

Perm Perm::inverse() const {
    std::vector<std::uint32_t> inv(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x) inv[images_[x]] = static_cast<std::uint32_t>(x);
    Perm p;
    p.images_ = std::move(inv);
    return p;
}

int Perm::sign() const {
    std::vector<bool> seen(images_.size(), false);
    std::size_t cycles = 0;
    for (std::size_t x = 0; x < images_.size(); ++x) {
        if (seen[x]) continue;
        ++cycles;
        for (auto y = x; !seen[y]; y = images_[y]) seen[y] = true;
    }
    return (images_.size() - cycles) % 2 == 0 ? 1 : -1;
}

std::string Perm::to_cycles() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t x = 0; x < images_.size(); ++x) {
        if (seen[x] || images_[x] == x) continue;
        out += '(';
        for (auto y = x; !seen[y]; y = images_[y]) {
            seen[y] = true;
            if (y != x) out += ',';
            out += std::to_string(y + 1);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) throw InputError("cannot multiply permutations of different degree");
    std::vector<std::uint32_t> images(a.degree());
    for (std::size_t x = 0; x < images.size(); ++x) images[x] = b.images_[a.images_[x]];
    Perm p;
    p.images_ = std::move(images);
    return p;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
    // FNV-1a over the image words.
    std::size_t h = 1469598103934665603ull;
    for (auto y : p.images()) {
        h ^= y;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace basesize::oracle
