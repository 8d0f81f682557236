#pragma once
#include <functional>
#include <future>
#include <thread>
#include <vector>

namespace tz {

// Maps f over 0..n-1, using threads when more than one core is available.
template <class T>
std::vector<T> parallel_map(size_t n, const std::function<T(size_t)>& f) {
  unsigned hw = std::thread::hardware_concurrency();
  std::vector<T> out;
  out.reserve(n);
  if (hw <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) out.push_back(f(i));
    return out;
  }
  std::vector<std::future<T>> fs;
  for (size_t i = 0; i < n; ++i) fs.push_back(std::async(std::launch::async, f, i));
  for (auto& x : fs) out.push_back(x.get());
  return out;
}

}  // namespace tz
