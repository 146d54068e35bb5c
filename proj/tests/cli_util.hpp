#pragma once

// Helpers for driving the kfc binary from tests. KFC_BIN and KFC_DATA_DIR
// come in as compile definitions from CMake.

#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace cli {

struct Result {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string binPath() { return KFC_BIN; }
inline std::string dataDir() { return KFC_DATA_DIR; }

inline Result run(const std::string& args) {
    std::string errFile = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                          "/kfc_cli_stderr." + std::to_string(getpid()) + ".txt";
    std::string cmd = binPath() + " " + args + " 2>" + errFile;
    Result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream err(errFile);
    std::ostringstream es;
    es << err.rdbuf();
    r.err = es.str();
    return r;
}

}  // namespace cli
