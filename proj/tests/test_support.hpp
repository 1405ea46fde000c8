#pragma once

#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>

#include <sys/wait.h>

#include "lei2json/util.hpp"

namespace testsupport {

inline std::filesystem::path fixture(const std::string& name) {
    return std::filesystem::path(LEI_FIXTURE_DIR) / name;
}

/// Unique scratch directory, removed on destruction.
class TempDir {
  public:
    TempDir() {
        static std::mt19937_64 rng(std::random_device{}());
        path_ = std::filesystem::temp_directory_path() /
                ("lei2json-test-" + std::to_string(rng()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path file(const std::string& name) const { return path_ / name; }

  private:
    std::filesystem::path path_;
};

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

/// Runs the CLI under test (path from the LEI2JSON_BIN compile definition)
/// with `args` appended, capturing exit code and both streams.
inline CliResult run_cli(const std::string& args) {
    TempDir scratch;
    std::filesystem::path out_file = scratch.file("stdout");
    std::filesystem::path err_file = scratch.file("stderr");
    std::string cmd = std::string(LEI2JSON_BIN) + " " + args + " >" + out_file.string() + " 2>" +
                      err_file.string();
    int status = std::system(cmd.c_str());

    CliResult result;
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    if (std::filesystem::exists(out_file)) result.out = lei2json::read_text_file(out_file);
    if (std::filesystem::exists(err_file)) result.err = lei2json::read_text_file(err_file);
    return result;
}

}  // namespace testsupport
