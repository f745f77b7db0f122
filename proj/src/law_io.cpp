#include "clt_lab/law_io.hpp"

#include "clt_lab/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace clt {

namespace {

[[noreturn]] void fail(const std::string& why)
{
    throw Error(ErrorKind::ParseError, "law file: " + why);
}

Rational number_field(const nlohmann::json& atom, const char* key)
{
    const auto it = atom.find(key);
    if (it == atom.end()) {
        fail(std::string("atom is missing \"") + key + "\"");
    }
    if (!it->is_string()) {
        fail(std::string("\"") + key + "\" must be a string");
    }
    return Rational::parse(it->get<std::string>());
}

} // namespace

ExactLaw parse_law_document(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(e.what());
    }
    if (!doc.is_object()) {
        fail("top level must be an object");
    }
    for (const auto& [key, value] : doc.items()) {
        if (key != "atoms") {
            fail("unknown key \"" + key + "\"");
        }
    }
    const auto atoms_it = doc.find("atoms");
    if (atoms_it == doc.end() || !atoms_it->is_array()) {
        fail("\"atoms\" must be an array");
    }

    std::vector<ExactAtom> atoms;
    for (const auto& atom : *atoms_it) {
        if (!atom.is_object()) {
            fail("every atom must be an object");
        }
        for (const auto& [key, value] : atom.items()) {
            if (key != "x" && key != "p") {
                fail("unknown atom key \"" + key + "\"");
            }
        }
        atoms.push_back(ExactAtom{number_field(atom, "x"), number_field(atom, "p")});
    }
    return ExactLaw::make(std::move(atoms));
}

ExactLaw load_law_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        fail("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_law_document(buffer.str());
}

} // namespace clt
