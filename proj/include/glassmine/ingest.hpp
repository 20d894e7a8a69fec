// Corpus acquisition: URL lists, cached page fetching, metadata scraping, and
// per-patent JSON serialization.
#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <unordered_set>
#include <vector>

#include "glassmine/record.hpp"

namespace glassmine {

// Order-preserving, exact-string deduplicated URL list; lines are trimmed and
// blanks dropped. Throws when the file is missing.
std::vector<std::string> load_url_list(const std::filesystem::path& path);

enum class FetchPolicy { OfflineOnly, FetchIfMissing };

struct FetchResult {
    enum class Status { Cached, Fetched, Failed, Rejected };
    Status status;
    std::string body;
    std::string error;
    bool ok() const { return status == Status::Cached || status == Status::Fetched; }
};

// Cached page loader. Documents are cached in corpus_dir keyed by a
// filesystem-safe digest of the normalized URL; under FetchIfMissing, cache
// misses hit the network with a fixed per-host inter-request delay.
class Fetcher {
  public:
    Fetcher(std::filesystem::path corpus_dir, FetchPolicy policy, int per_host_delay_ms = 2000);

    FetchResult fetch_or_load(const std::string& url);

    static std::string normalize_url(const std::string& url);
    static std::filesystem::path cache_path(const std::filesystem::path& corpus_dir,
                                            const std::string& url);

  private:
    std::filesystem::path corpus_dir_;
    FetchPolicy policy_;
    int delay_ms_;
    std::vector<std::pair<std::string, std::chrono::steady_clock::time_point>> last_request_;

    void rate_limit(const std::string& host);
};

// Populates every metadata field present in the page's meta tags; absent tags
// degrade to empty values. html_tables is left empty.
PatentRecord extract_metadata(const std::string& html, const std::string& url);

// Verbatim markup of each patent-tables section, document order.
std::vector<std::string> extract_table_sections(const std::string& html);

enum class SerializeStatus { Created, SkippedExisting };

// One JSON file per patent named by publication number; an existing file makes
// the call a no-op skip. Throws on write failure.
SerializeStatus serialize_record(const PatentRecord& record,
                                 const std::filesystem::path& out_dir,
                                 std::filesystem::path* written_path = nullptr);

}  // namespace glassmine
