// Acceptance runner: executes `verify-all` through the CLI twice with the
// same configuration, prints one pass/fail line per criterion from the
// first run, and checks byte-identical output (criterion 10).
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: divwin-acceptance <path-to-divwin-cli>\n";
        return 2;
    }
    // at least 4 so the parallel merge paths are exercised even on one core
    unsigned jobs = std::max(4u, std::thread::hardware_concurrency());
    std::string cmd = std::string("\"") + argv[1] + "\" verify-all --jobs " +
                      std::to_string(jobs) + " 2>&1";

    auto run = [&](int* exit_code) {
        std::string out;
        FILE* pipe = popen(cmd.c_str(), "r");
        if (!pipe) {
            std::cerr << "failed to launch: " << cmd << "\n";
            std::exit(2);
        }
        std::array<char, 4096> buf;
        size_t got;
        while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
            out.append(buf.data(), got);
        int status = pclose(pipe);
        *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        return out;
    };

    int rc1 = 0, rc2 = 0;
    std::string first = run(&rc1);
    std::string second = run(&rc2);

    // criteria 1..9, as produced by the verification suite
    std::istringstream lines(first);
    std::string line;
    while (std::getline(lines, line))
        if (line.rfind("criterion ", 0) == 0) std::cout << line << "\n";

    bool identical = (first == second) && (rc1 == rc2);
    std::cout << "criterion 10 (determinism): " << (identical ? "PASS" : "FAIL")
              << " — two verify-all runs with --jobs " << jobs
              << (identical ? " are byte-identical" : " differ") << "\n";

    if (rc1 != 0) {
        std::cerr << "verify-all exited with " << rc1 << "\n";
        return 1;
    }
    return identical ? 0 : 1;
}
