#pragma once

// Local cache of benchmark corpora. Files live in $WLZ_CORPUS_DIR (default
// ~/.cache/wlz/corpus). A corpus URL may point at the raw file or at a
// .tar.gz archive holding it; WLZ_CORPUS_URL_<NAME> overrides the URL, with
// <NAME> upper-cased and '.' replaced by '_' (e.g. WLZ_CORPUS_URL_BIBLE_TXT).

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace wlz {

struct CorpusEntry {
  std::string name;
  std::string url;
  std::string archive_member;  // empty when the URL is the file itself
  std::uint64_t expected_bytes;  // 0 if unknown
};

const std::vector<CorpusEntry>& known_corpora();

std::filesystem::path corpus_dir();

struct FetchResult {
  std::filesystem::path path;
  std::uint64_t bytes = 0;
  bool cache_hit = false;
};

/// Returns the cached file, downloading it on a cache miss. Throws
/// std::runtime_error naming the expected local path when that fails, or
/// listing the known names for an unknown corpus.
FetchResult fetch_corpus(const std::string& name, const std::filesystem::path& cache_dir);

/// Extracts one regular file from an uncompressed ustar image.
std::optional<std::string> tar_extract(const std::string& tar, const std::string& member);
/// Inflates gzip data; throws std::runtime_error on malformed input.
std::string gunzip(const std::string& gz);

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, const std::string& data);

}  // namespace wlz
