// Converts the human-edited catalog source (expression strings) into polynomial JSON.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "fg/covers.hpp"

using nlohmann::json;

namespace {

json poly(const json& v) { return fg::poly_from_json(v).to_json(); }

void convert_fields(json& obj, std::initializer_list<const char*> keys) {
    for (auto k : keys)
        if (obj.contains(k)) obj[k] = poly(obj[k]);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"catalog generator"};
    std::string in_path, out_path;
    bool check = false;
    app.add_option("input", in_path, "source catalog")->required();
    app.add_option("output", out_path, "generated catalog")->required();
    app.add_flag("--verify", check, "verify every entry after conversion");
    CLI11_PARSE(app, argc, argv);

    std::ifstream in(in_path);
    json src;
    in >> src;
    for (auto& [id, c] : src["curves"].items()) convert_fields(c, {"p"});
    for (auto& e : src["covers"]) {
        convert_fields(e["target"], {"G2", "G3"});
        convert_fields(e["p_map"], {"num", "den"});
        convert_fields(e["pprime_map"], {"num", "den"});
        convert_fields(e["pullback"], {"constant", "num", "den"});
        if (e.contains("substitutions"))
            for (auto& [k, v] : e["substitutions"].items()) v = poly(v);
        if (e.contains("relations"))
            for (auto& r : e["relations"]) r["value"] = poly(r["value"]);
    }
    if (check) fg::CoverCatalog::from_json(src, true);
    std::ofstream(out_path) << src.dump(1) << "\n";
    std::cout << "wrote " << src["covers"].size() << " covers to " << out_path << "\n";
    return 0;
}
