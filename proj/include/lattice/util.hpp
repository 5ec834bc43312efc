#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace lattice {

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);
bool contains(std::string_view haystack, std::string_view needle);

/// FNV-1a 64-bit; used for stable content digests and oracle hash keys.
std::uint64_t fnv1a(std::string_view data);
std::string fnv1a_hex(std::string_view data);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

void log_warn(const std::string& message);

/// Runs fn(0..n-1) on at most max_parallel worker threads. Exceptions are
/// rethrown on the calling thread after all workers join.
void parallel_for(std::size_t n, int max_parallel, const std::function<void(std::size_t)>& fn);

}  // namespace lattice
