#pragma once

#include <cstdint>
#include <cstring>
#include <string>
#include <string_view>

namespace artdisp {

/// 64-bit FNV-1a, incremental.
class Fnv1a {
public:
    void bytes(const void* data, std::size_t n) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < n; ++i) {
            h_ ^= p[i];
            h_ *= 1099511628211ULL;
        }
    }
    void text(std::string_view s) { bytes(s.data(), s.size()); }
    template <typename T>
    void value(const T& v) {
        bytes(&v, sizeof v);
    }
    std::uint64_t digest() const { return h_; }
    std::string hex() const {
        static constexpr char digits[] = "0123456789abcdef";
        std::string out(16, '0');
        for (int i = 0; i < 16; ++i) out[static_cast<std::size_t>(15 - i)] = digits[(h_ >> (4 * i)) & 0xf];
        return out;
    }

private:
    std::uint64_t h_ = 14695981039346656037ULL;
};

inline std::string fnv1a_hex(std::string_view s) {
    Fnv1a h;
    h.text(s);
    return h.hex();
}

}  // namespace artdisp
