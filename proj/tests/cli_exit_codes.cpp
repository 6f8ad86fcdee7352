// Drives the installed CLI binary end to end and checks the documented exit
// codes: 0 ok, 2 config error, 3 data error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <sys/wait.h>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        std::cerr << "FAIL: " << what << "\n";
        ++failures;
    }
}

int run(const std::string& command) {
    const int status = std::system((command + " >/dev/null 2>&1").c_str());
    if (status == -1) return -1;
    return WEXITSTATUS(status);
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return text;
}

}  // namespace

int main() {
    const std::string cli = QSMOTE_CLI_PATH;
    const std::string fixture = std::string(QSMOTE_SOURCE_DIR) + "/data/blobs4.csv";
    const auto dir = std::filesystem::temp_directory_path() / "qsmote_cli_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    const std::string out = (dir / "out").string();

    expect(run(cli + " validate-channels") == 0, "validate-channels exits 0");
    expect(run(cli + " validate-channels --self-test-fault") != 0,
           "injected fault exits nonzero");

    expect(run(cli + " balance -d " + fixture + " -o " + out) == 0, "balance exits 0");
    expect(run(cli + " balance -d " + fixture) == 0, "default output dir works");

    expect(run(cli + " --nonsense") == 2, "unknown flag exits 2");
    expect(run(cli + " balance") == 2, "missing required dataset flag exits 2");
    expect(run(cli + " evaluate -d " + fixture + " -o " + out +
               " --channels not_a_channel --probabilities 0.5") == 2,
           "unknown channel exits 2");
    expect(run(cli + " evaluate -d " + fixture + " -o " + out +
               " --probabilities 1.5 --channels bit_flip") == 2,
           "out-of-range probability exits 2");

    expect(run(cli + " balance -d /does/not/exist.csv -o " + out) == 3,
           "missing dataset exits 3");
    {
        std::ofstream bad(dir / "bad.csv");
        bad << "a,b\n1,2\n";
    }
    expect(run(cli + " balance -d " + (dir / "bad.csv").string() + " -o " + out) == 3,
           "missing label column exits 3");

    // QSMOTE_SEED mirrors --seed exactly.
    const std::string env_out = (dir / "env").string();
    const std::string flag_out = (dir / "flag").string();
    expect(run("QSMOTE_SEED=7 " + cli + " balance -d " + fixture + " -o " + env_out) == 0,
           "env-seeded balance runs");
    expect(run(cli + " balance -d " + fixture + " --seed 7 -o " + flag_out) == 0,
           "flag-seeded balance runs");
    expect(slurp(env_out + "/balanced.csv") == slurp(flag_out + "/balanced.csv"),
           "QSMOTE_SEED and --seed produce identical output");
    const std::string default_out = (dir / "default").string();
    expect(run(cli + " balance -d " + fixture + " -o " + default_out) == 0, "default seed runs");
    expect(slurp(default_out + "/balanced.csv") != slurp(flag_out + "/balanced.csv"),
           "different seeds change the synthetics");

    // key=value config file drives the run like flags do.
    {
        std::ofstream cfg(dir / "run.conf");
        cfg << "dataset=" << fixture << "\nout=" << (dir / "cfg").string()
            << "\nseed=7\nclusters=4\n";
    }
    expect(run(cli + " balance --config " + (dir / "run.conf").string()) == 0,
           "config file run exits 0");
    expect(slurp((dir / "cfg" / "balanced.csv")) == slurp(flag_out + "/balanced.csv"),
           "config file matches equivalent flags");

    if (failures == 0) {
        std::cout << "cli_exit_codes: all checks passed\n";
        return 0;
    }
    std::cerr << failures << " check(s) failed\n";
    return 1;
}
