#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace ssg::detail {

/// Moore partition refinement on an explicit transducer. Two states share a
/// class iff they agree on outputs and their restrictions share classes, for
/// every letter. Class ids are numbered by first occurrence.
inline std::vector<std::uint32_t> moore_classes(
    const std::vector<std::vector<std::uint32_t>>& output,
    const std::vector<std::vector<std::uint32_t>>& restriction) {
  const std::size_t n = output.size();
  std::vector<std::uint32_t> cls(n, 0);
  std::size_t class_count = n == 0 ? 0 : 1;
  while (true) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> signature_ids;
    std::vector<std::uint32_t> next(n);
    for (std::size_t g = 0; g < n; ++g) {
      std::vector<std::uint32_t> sig;
      sig.reserve(2 * output[g].size() + 1);
      sig.push_back(cls[g]);
      for (std::size_t x = 0; x < output[g].size(); ++x) {
        sig.push_back(output[g][x]);
        sig.push_back(cls[restriction[g][x]]);
      }
      auto [it, inserted] =
          signature_ids.try_emplace(std::move(sig), static_cast<std::uint32_t>(signature_ids.size()));
      next[g] = it->second;
    }
    cls = std::move(next);
    if (signature_ids.size() == class_count) return cls;
    class_count = signature_ids.size();
  }
}

}  // namespace ssg::detail
