// fgrun: run a .fg session file and report results.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fg/session.hpp"

int main(int argc, char** argv) {
    CLI::App app{"graded local cohomology session runner"};
    std::string path;
    std::string format = "text";
    std::string out_dir;
    fg::RunOptions opt;
    app.add_option("file", path, "session file")->required();
    app.add_option("--format", format, "output format: text, json or tsv")
        ->check(CLI::IsMember({"text", "json", "tsv"}));
    app.add_option("--seed", opt.seed, "seed for randomized subroutines");
    app.add_option("--max-candidates", opt.max_candidates,
                   "candidate cap for sequence search");
    app.add_option("--window-margin-extra", opt.window_margin_extra,
                   "extra colimit margin for windowed verifications");
    app.add_option("--out", out_dir, "directory for per-command output files");
    CLI11_PARSE(app, argc, argv);

    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    try {
        fg::Session ses = fg::parse_session(buf.str());
        std::vector<fg::Report> reports = fg::run(ses, opt);
        bool any_fail = false;
        for (auto& rep : reports) {
            any_fail = any_fail || rep.failed;
            std::string text = fg::emit(rep, format);
            if (out_dir.empty()) {
                std::cout << text;
                if (format == "json") std::cout << "\n";
            } else {
                std::filesystem::create_directories(out_dir);
                std::string ext = format == "json" ? ".json" : format == "tsv" ? ".tsv" : ".txt";
                std::ofstream of(std::filesystem::path(out_dir) /
                                 (std::to_string(rep.index) + "_" + rep.command + ext));
                of << text;
                if (format == "json") of << "\n";
            }
        }
        return any_fail ? 1 : 0;
    } catch (const fg::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
