#pragma once

#include <array>
#include <string>

namespace nsurf {

// Permutation of the four vertex labels of a tetrahedron.
class Perm4 {
public:
    // Identity by default.
    constexpr Perm4() : image_{0, 1, 2, 3} {}

    constexpr Perm4(int a, int b, int c, int d) : image_{a, b, c, d} {}

    constexpr int operator[](int i) const { return image_[i]; }

    constexpr Perm4 inverse() const {
        Perm4 out;
        for (int i = 0; i < 4; ++i) out.image_[image_[i]] = i;
        return out;
    }

    // Composition: (*this).of(other) applies other first.
    constexpr Perm4 of(const Perm4& other) const {
        Perm4 out;
        for (int i = 0; i < 4; ++i) out.image_[i] = image_[other.image_[i]];
        return out;
    }

    constexpr bool is_identity() const {
        return image_[0] == 0 && image_[1] == 1 && image_[2] == 2 && image_[3] == 3;
    }

    // +1 for even permutations, -1 for odd.
    constexpr int sign() const {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (image_[i] > image_[j]) ++inversions;
        return (inversions % 2 == 0) ? 1 : -1;
    }

    // Four digits over "0123"; position v holds the image of v.
    std::string str() const {
        std::string s(4, '0');
        for (int i = 0; i < 4; ++i) s[i] = static_cast<char>('0' + image_[i]);
        return s;
    }

    // Returns false if the four characters are not a permutation of "0123".
    static bool from_string(const std::string& s, Perm4& out);

    friend constexpr bool operator==(const Perm4& a, const Perm4& b) {
        return a.image_ == b.image_;
    }

private:
    std::array<int, 4> image_;
};

}  // namespace nsurf
