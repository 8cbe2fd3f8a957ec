#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace growthlab {

/// 64-bit FNV-1a over raw bytes.
std::uint64_t fnv1a64(std::string_view bytes) noexcept;

/// Lowercase 16-digit hex rendering of a 64-bit digest.
std::string digest_hex(std::uint64_t digest);

}  // namespace growthlab
