#include "wlz/corpus.hpp"

#include <curl/curl.h>
#include <zlib.h>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wlz {
namespace fs = std::filesystem;

const std::vector<CorpusEntry>& known_corpora() {
  static const std::vector<CorpusEntry> entries = {
      {"bible.txt", "https://corpus.canterbury.ac.nz/resources/large.tar.gz", "bible.txt", 4047392},
      {"world192.txt", "https://corpus.canterbury.ac.nz/resources/large.tar.gz", "world192.txt", 2473400},
      {"E.coli", "https://corpus.canterbury.ac.nz/resources/large.tar.gz", "E.coli", 4638690},
  };
  return entries;
}

fs::path corpus_dir() {
  if (const char* env = std::getenv("WLZ_CORPUS_DIR"); env && *env) return env;
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "wlz" / "corpus";
  return fs::path(".wlz-corpus");
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, const std::string& data) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw std::runtime_error("write failed: " + p.string());
}

std::string gunzip(const std::string& gz) {
  z_stream zs{};
  if (inflateInit2(&zs, 16 + MAX_WBITS) != Z_OK) throw std::runtime_error("inflateInit2 failed");
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(gz.data()));
  zs.avail_in = static_cast<uInt>(gz.size());
  std::string out;
  char buf[1 << 16];
  int rc;
  do {
    zs.next_out = reinterpret_cast<Bytef*>(buf);
    zs.avail_out = sizeof buf;
    rc = inflate(&zs, Z_NO_FLUSH);
    if (rc != Z_OK && rc != Z_STREAM_END) {
      inflateEnd(&zs);
      throw std::runtime_error("gzip data is corrupt");
    }
    out.append(buf, sizeof buf - zs.avail_out);
  } while (rc != Z_STREAM_END && (zs.avail_in > 0 || zs.avail_out == 0));
  inflateEnd(&zs);
  if (rc != Z_STREAM_END) throw std::runtime_error("gzip data is truncated");
  return out;
}

std::optional<std::string> tar_extract(const std::string& tar, const std::string& member) {
  std::size_t off = 0;
  while (off + 512 <= tar.size()) {
    const char* h = tar.data() + off;
    if (h[0] == '\0') break;
    std::string name(h, ::strnlen(h, 100));
    std::string prefix(h + 345, ::strnlen(h + 345, 155));
    if (!prefix.empty()) name = prefix + "/" + name;
    const std::uint64_t size = std::strtoull(std::string(h + 124, 12).c_str(), nullptr, 8);
    const char type = h[156];
    off += 512;
    if (off + size > tar.size()) throw std::runtime_error("tar member overruns archive");
    const std::string base = name.substr(name.find_last_of('/') == std::string::npos ? 0 : name.find_last_of('/') + 1);
    if ((type == '0' || type == '\0') && (name == member || base == member)) return tar.substr(off, size);
    off += (size + 511) / 512 * 512;
  }
  return std::nullopt;
}

namespace {

std::size_t collect(char* data, std::size_t size, std::size_t n, void* user) {
  static_cast<std::string*>(user)->append(data, size * n);
  return size * n;
}

std::string download(const std::string& url) {
  CURL* curl = curl_easy_init();
  if (!curl) throw std::runtime_error("curl init failed");
  std::string body;
  curl_easy_setopt(curl, CURLOPT_URL, url.c_str());
  curl_easy_setopt(curl, CURLOPT_FOLLOWLOCATION, 1L);
  curl_easy_setopt(curl, CURLOPT_FAILONERROR, 1L);
  curl_easy_setopt(curl, CURLOPT_CONNECTTIMEOUT, 20L);
  curl_easy_setopt(curl, CURLOPT_WRITEFUNCTION, collect);
  curl_easy_setopt(curl, CURLOPT_WRITEDATA, &body);
  const CURLcode rc = curl_easy_perform(curl);
  curl_easy_cleanup(curl);
  if (rc != CURLE_OK) throw std::runtime_error(std::string("download failed: ") + curl_easy_strerror(rc));
  return body;
}

std::string url_override_var(const std::string& name) {
  std::string var = "WLZ_CORPUS_URL_";
  for (char c : name) var += c == '.' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return var;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

FetchResult fetch_corpus(const std::string& name, const fs::path& cache_dir) {
  const auto& known = known_corpora();
  auto it = std::find_if(known.begin(), known.end(), [&](const CorpusEntry& e) { return e.name == name; });
  if (it == known.end()) {
    std::string names;
    for (const auto& e : known) names += (names.empty() ? "" : ", ") + e.name;
    throw std::runtime_error("unknown corpus '" + name + "'; known corpora: " + names);
  }
  const fs::path target = cache_dir / name;
  if (fs::exists(target)) return {target, fs::file_size(target), true};

  CorpusEntry entry = *it;
  if (const char* env = std::getenv(url_override_var(name).c_str()); env && *env) {
    entry.url = env;
    entry.archive_member = ends_with(entry.url, ".tar.gz") || ends_with(entry.url, ".tgz") ? name : "";
  }
  std::string data;
  try {
    data = download(entry.url);
    if (!entry.archive_member.empty()) {
      auto member = tar_extract(gunzip(data), entry.archive_member);
      if (!member) throw std::runtime_error(entry.archive_member + " not found in archive");
      data = std::move(*member);
    }
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string(e.what()) + "; place " + name + " at " + target.string() +
                             " (or set WLZ_CORPUS_DIR / " + url_override_var(name) + ")");
  }
  fs::create_directories(cache_dir);
  write_file(target, data);
  return {target, data.size(), false};
}

}  // namespace wlz
