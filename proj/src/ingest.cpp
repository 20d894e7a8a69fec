#include "glassmine/ingest.hpp"

#include <chrono>
#include <fstream>
#include <thread>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "glassmine/html.hpp"
#include "glassmine/io_util.hpp"
#include "glassmine/text.hpp"

namespace glassmine {

std::vector<std::string> load_url_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("URL list not found: " + path.string());
    std::vector<std::string> urls;
    std::unordered_set<std::string> seen;
    std::string line;
    while (std::getline(in, line)) {
        std::string url = trim(line);
        if (url.empty()) continue;
        if (seen.insert(url).second) urls.push_back(url);
    }
    return urls;
}

namespace {

struct UrlParts {
    std::string scheme;
    std::string host_port;  // "host" or "host:port"
    std::string path;
    bool valid = false;
};

UrlParts parse_url(const std::string& url) {
    UrlParts p;
    size_t scheme_end = url.find("://");
    if (scheme_end == std::string::npos) return p;
    p.scheme = to_lower_ascii(url.substr(0, scheme_end));
    if (p.scheme != "http" && p.scheme != "https") return p;
    size_t host_start = scheme_end + 3;
    size_t path_start = url.find('/', host_start);
    if (path_start == std::string::npos) {
        p.host_port = url.substr(host_start);
        p.path = "/";
    } else {
        p.host_port = url.substr(host_start, path_start - host_start);
        p.path = url.substr(path_start);
    }
    p.valid = !p.host_port.empty();
    return p;
}

}  // namespace

Fetcher::Fetcher(std::filesystem::path corpus_dir, FetchPolicy policy, int per_host_delay_ms)
    : corpus_dir_(std::move(corpus_dir)), policy_(policy), delay_ms_(per_host_delay_ms) {
    std::filesystem::create_directories(corpus_dir_);
}

std::string Fetcher::normalize_url(const std::string& url) { return trim(url); }

std::filesystem::path Fetcher::cache_path(const std::filesystem::path& corpus_dir,
                                          const std::string& url) {
    return corpus_dir / (fs_digest(normalize_url(url)) + ".html");
}

void Fetcher::rate_limit(const std::string& host) {
    auto now = std::chrono::steady_clock::now();
    for (auto& [h, t] : last_request_) {
        if (h != host) continue;
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(now - t).count();
        if (elapsed < delay_ms_)
            std::this_thread::sleep_for(std::chrono::milliseconds(delay_ms_ - elapsed));
        t = std::chrono::steady_clock::now();
        return;
    }
    last_request_.emplace_back(host, now);
}

FetchResult Fetcher::fetch_or_load(const std::string& url) {
    std::string norm = normalize_url(url);
    UrlParts parts = parse_url(norm);
    if (!parts.valid)
        return {FetchResult::Status::Rejected, "", "malformed URL: " + url};

    auto path = cache_path(corpus_dir_, norm);
    if (std::filesystem::exists(path))
        return {FetchResult::Status::Cached, read_file(path), ""};

    if (policy_ == FetchPolicy::OfflineOnly)
        return {FetchResult::Status::Failed, "", "not cached under offline_only: " + url};

    rate_limit(parts.host_port);
    httplib::Client client(parts.scheme + "://" + parts.host_port);
    client.set_follow_location(true);
    client.set_connection_timeout(15, 0);
    client.set_read_timeout(30, 0);
    auto res = client.Get(parts.path);
    if (!res)
        return {FetchResult::Status::Failed, "", "request error: " + httplib::to_string(res.error())};
    if (res->status < 200 || res->status >= 300)
        return {FetchResult::Status::Failed, "", "HTTP " + std::to_string(res->status) + ": " + url};

    write_file(path, res->body);
    return {FetchResult::Status::Fetched, res->body, ""};
}

PatentRecord extract_metadata(const std::string& html, const std::string& url) {
    PatentRecord r;
    r.url = url;
    for (const auto& tag : html::extract_meta_tags(html)) {
        if (tag.name == "DC.title") {
            if (r.title.empty()) r.title = tag.content;
        } else if (tag.name == "DC.type") {
            if (r.doc_type.empty()) r.doc_type = tag.content;
        } else if (tag.name == "DC.description") {
            if (r.description.empty()) r.description = tag.content;
        } else if (tag.name == "citation_patent_application_number") {
            if (r.application_number.empty()) r.application_number = tag.content;
        } else if (tag.name == "citation_patent_publication_number") {
            if (r.publication_number.empty()) r.publication_number = tag.content;
        } else if (tag.name == "citation_pdf_url") {
            if (r.pdf_url.empty()) r.pdf_url = tag.content;
        } else if (tag.name == "DC.contributor") {
            if (tag.scheme == "assignee") {
                if (r.assignee.empty()) r.assignee = tag.content;
            } else {
                r.inventors.push_back(tag.content);
            }
        } else if (tag.name == "DC.date") {
            r.dates.push_back(tag.content);
        }
    }
    return r;
}

std::vector<std::string> extract_table_sections(const std::string& html) {
    auto found = html::find_elements(html, "patent-tables");
    if (!found.ok) return {};
    return found.slices;
}

SerializeStatus serialize_record(const PatentRecord& record,
                                 const std::filesystem::path& out_dir,
                                 std::filesystem::path* written_path) {
    if (record.publication_number.empty())
        throw std::runtime_error("record has no publication number: " + record.url);
    auto path = out_dir / (to_lower_ascii(record.publication_number) + ".json");
    if (written_path) *written_path = path;
    if (std::filesystem::exists(path)) return SerializeStatus::SkippedExisting;
    write_file(path, record.to_json());
    return SerializeStatus::Created;
}

}  // namespace glassmine
