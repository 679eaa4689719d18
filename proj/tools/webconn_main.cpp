#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "webconn/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic engine for planar web connections"};
    std::string command;
    std::string file;
    std::string out_path;
    bool json = false;
    webconn::Options options;
    app.add_option("command", command, "classify|invariants|connection|curvature|rank|trace-check|analyze")
        ->required();
    app.add_option("file", file, "web description file")->required();
    app.add_flag("--json", json, "emit JSON instead of text");
    app.add_option("--out", out_path, "write the report to a file");
    app.add_flag("--experimental", options.experimental, "allow degrees above 6");
    CLI11_PARSE(app, argc, argv);

    try {
        const webconn::Command cmd = webconn::parse_command(command);
        std::ifstream in(file);
        if (!in) {
            std::cerr << "error: cannot read " << file << "\n";
            return 1;
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        const webconn::WebSpecFile spec = webconn::parse_spec(buffer.str());
        const webconn::Report report = webconn::run(cmd, spec, options);
        const std::string text = webconn::serialize_report(report, json);
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "error: cannot write " << out_path << "\n";
                return 2;
            }
            out << text;
        } else {
            std::cout << text;
        }
        return 0;
    } catch (const webconn::WebError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return webconn::exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
