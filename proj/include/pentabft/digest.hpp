#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pentabft {

/// 256-bit content digest. All protocol hashing goes through sha256() over
/// canonical message bytes.
struct Digest {
  std::array<std::uint8_t, 32> bytes{};

  auto operator<=>(const Digest&) const = default;

  std::string hex() const;
  std::string hex16() const;  // 16-char prefix used in trace summaries

  static Digest from_hex(const std::string& s);  // throws std::invalid_argument
};

Digest sha256(std::span<const std::uint8_t> data);
Digest sha256(const std::vector<std::uint8_t>& data);

}  // namespace pentabft
