#pragma once

#include <filesystem>
#include <fstream>
#include <mutex>
#include <string>
#include <vector>

namespace glassmine {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

// Plain-text control list (one entry per line). Truncated on open so a rerun
// regenerates it; appends within a run go through one serialized writer.
class ControlList {
  public:
    explicit ControlList(std::filesystem::path path);
    void append(const std::string& line);
    const std::filesystem::path& path() const { return path_; }

  private:
    std::filesystem::path path_;
    std::ofstream out_;
    std::mutex mutex_;
};

// Stable, filesystem-safe digest used for URL cache keys (FNV-1a 64, hex).
std::string fs_digest(std::string_view data);

std::vector<std::string> list_files_sorted(const std::filesystem::path& dir,
                                           const std::string& extension);

}  // namespace glassmine
