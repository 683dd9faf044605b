// photon-ledger <photon-density|summary|field-map|amplitude|validate> --config <path>
//               [--out <dir>] [--oracle] [--threads N]

#include <cstdio>
#include <cstdlib>
#include <string>

#include "CLI11.hpp"
#include "photon_ledger/commands.hpp"
#include "photon_ledger/parallel.hpp"

int main(int argc, char** argv) {
    using namespace photon_ledger;

    CLI::App app{"Coherent-state photon ledger for macroscopic currents"};
    app.set_version_flag("--version", kToolVersion);
    std::string command, config_path, out_dir = ".";
    bool oracle = false;
    int threads = 0;
    app.add_option("command", command, "Subcommand")->required()->check(CLI::IsMember(command_names()));
    app.add_option("--config", config_path, "Run configuration (JSON)")->required();
    app.add_option("--out", out_dir, "Output directory");
    app.add_flag("--oracle", oracle, "Add classical oracle columns to field-map");
    app.add_option("--threads", threads, "Worker threads (falls back to PHOTON_LEDGER_THREADS)")
        ->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

    if (threads == 0) {
        if (const char* env = std::getenv("PHOTON_LEDGER_THREADS")) threads = std::atoi(env);
        if (threads <= 0) threads = 1;
    }
    set_thread_count(threads);

    try {
        const RunConfig config = load_config(config_path);
        CommandOptions options;
        options.out_dir = out_dir;
        options.config_path = config_path;
        options.oracle = oracle;
        options.threads = threads;
        return run_command(command, config, options);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "%s\n", error_json(e).c_str());
        return 2;
    }
}
