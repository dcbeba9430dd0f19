// Copyright 2026 The fsgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Permutations of {0, ..., n-1} in one-line form, n <= 20, packed into bytes.
// A permutation sigma is read as "position i holds label sigma(i)"; it is a
// vertex of FS(X, Y) with positions in V(X) and labels in V(Y).

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <cstring>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fsgraph/error.hpp"

namespace fsg {

inline constexpr int kMaxPermutationSize = 20;

class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n) {
    detail::require(n >= 0 && n <= kMaxPermutationSize, "permutation size must lie in [0, 20]");
    Permutation p;
    p.n_ = static_cast<std::uint8_t>(n);
    for (int i = 0; i < n; ++i) p.img_[i] = static_cast<std::uint8_t>(i);
    return p;
  }

  /// Validates that `images` is a bijection of 0..n-1.
  static Permutation from_images(std::span<const int> images) {
    const int n = static_cast<int>(images.size());
    detail::require(n <= kMaxPermutationSize, "permutation size must lie in [0, 20]");
    Permutation p;
    p.n_ = static_cast<std::uint8_t>(n);
    std::uint32_t seen = 0;
    for (int i = 0; i < n; ++i) {
      const int v = images[i];
      detail::require(v >= 0 && v < n && (seen & (1u << v)) == 0,
                      "permutation images must be a bijection");
      seen |= 1u << v;
      p.img_[i] = static_cast<std::uint8_t>(v);
    }
    return p;
  }

  static Permutation from_images(std::initializer_list<int> images) {
    return from_images(std::span<const int>(images.begin(), images.size()));
  }

  int size() const { return n_; }
  int operator[](int i) const { return img_[i]; }
  std::span<const std::uint8_t> images() const { return {img_.data(), n_}; }

  /// Position holding `label`.
  int position_of(int label) const {
    for (int i = 0; i < n_; ++i) {
      if (img_[i] == label) return i;
    }
    return -1;
  }

  Permutation inverse() const {
    Permutation p;
    p.n_ = n_;
    for (int i = 0; i < n_; ++i) p.img_[img_[i]] = static_cast<std::uint8_t>(i);
    return p;
  }

  /// Swaps the entries at two positions; equals compose(*this, (i j)).
  Permutation swapped(int i, int j) const {
    Permutation p = *this;
    std::swap(p.img_[i], p.img_[j]);
    return p;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.n_ == b.n_ && std::memcmp(a.img_.data(), b.img_.data(), a.n_) == 0;
  }

  /// Lexicographic on the one-line word; shorter words first.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    for (int i = 0; i < a.n_; ++i) {
      if (a.img_[i] != b.img_[i]) return a.img_[i] <=> b.img_[i];
    }
    return std::strong_ordering::equal;
  }

 private:
  std::array<std::uint8_t, kMaxPermutationSize> img_{};
  std::uint8_t n_ = 0;
};

/// (sigma o pi)(i) = sigma(pi(i)).
inline Permutation compose(const Permutation& sigma, const Permutation& pi) {
  detail::require(sigma.size() == pi.size(), "compose needs permutations of equal length");
  std::vector<int> out(sigma.size());
  for (int i = 0; i < sigma.size(); ++i) out[i] = sigma[pi[i]];
  return Permutation::from_images(out);
}

inline Permutation transposition(int n, int i, int j) {
  detail::require(i >= 0 && j >= 0 && i < n && j < n && i != j, "transposition positions out of range");
  return Permutation::identity(n).swapped(i, j);
}

inline Permutation apply_transposition(const Permutation& sigma, int i, int j) {
  detail::require(i >= 0 && j >= 0 && i < sigma.size() && j < sigma.size() && i != j,
                  "transposition positions out of range");
  return sigma.swapped(i, j);
}

/// +1 or -1 from the parity of n minus the number of cycles.
inline int sign(const Permutation& sigma) {
  std::uint32_t seen = 0;
  int cycles = 0;
  for (int i = 0; i < sigma.size(); ++i) {
    if ((seen & (1u << i)) != 0) continue;
    ++cycles;
    for (int j = i; (seen & (1u << j)) == 0; j = sigma[j]) seen |= 1u << j;
  }
  return (sigma.size() - cycles) % 2 == 0 ? 1 : -1;
}

/// sigma o phi with phi(i) = i + 1 mod n: the word rotated left by one.
inline Permutation cyclic_shift(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = sigma[(i + 1) % n];
  return Permutation::from_images(out);
}

// ---------------------------------------------------------------------------
// Lexicographic ranking. rank() is the index of sigma in the lexicographic
// listing of all n! permutations.

inline std::uint64_t factorial(int n) {
  detail::require(n >= 0 && n <= kMaxPermutationSize, "factorial argument must lie in [0, 20]");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

inline std::uint64_t rank(const Permutation& sigma) {
  const int n = sigma.size();
  std::uint32_t left = (n >= 32) ? ~0u : ((1u << n) - 1);
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    const int v = sigma[i];
    r = r * static_cast<std::uint64_t>(n - i) +
        static_cast<std::uint64_t>(std::popcount(left & ((1u << v) - 1)));
    left &= ~(1u << v);
  }
  return r;
}

inline Permutation unrank(int n, std::uint64_t r) {
  detail::require(r < factorial(n), "rank out of range");
  std::vector<int> digits(n);
  for (int i = n - 1; i >= 0; --i) {
    const auto base = static_cast<std::uint64_t>(n - i);
    digits[i] = static_cast<int>(r % base);
    r /= base;
  }
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) {
    out[i] = pool[digits[i]];
    pool.erase(pool.begin() + digits[i]);
  }
  return Permutation::from_images(out);
}

// ---------------------------------------------------------------------------
// Text forms: "53142" (n <= 9) or "5,3,1,4,2"; labels are 1-indexed.

inline std::string to_string(const Permutation& sigma) {
  std::string out;
  for (int i = 0; i < sigma.size(); ++i) {
    if (sigma.size() > 9 && i > 0) out.push_back(',');
    out += std::to_string(sigma[i] + 1);
  }
  return out;
}

inline Permutation parse_permutation(std::string_view text) {
  std::vector<int> images;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      detail::require(c >= '1' && c <= '9', "one-line permutation must use digits 1-9");
      images.push_back(c - '1');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      const std::string_view field = text.substr(start, end - start);
      detail::require(!field.empty() && field.size() <= 2 &&
                          std::all_of(field.begin(), field.end(), [](char c) { return c >= '0' && c <= '9'; }),
                      "malformed comma-separated permutation");
      images.push_back(std::stoi(std::string(field)) - 1);
      start = end + 1;
    }
  }
  detail::require(!images.empty(), "empty permutation");
  return Permutation::from_images(images);
}

}  // namespace fsg

template <>
struct std::hash<fsg::Permutation> {
  std::size_t operator()(const fsg::Permutation& p) const noexcept {
    // FNV-1a over the packed bytes.
    std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(p.size());
    for (std::uint8_t b : p.images()) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};
