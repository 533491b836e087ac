#pragma once

#include <string>

#include "roller/io.hpp"

inline std::string fixture(const std::string& name) { return std::string(ROLLER_FIXTURE_DIR) + "/" + name + ".json"; }
inline roller::FinitePocSet load_poc(const std::string& name) {
    return roller::pocset_from_json(roller::read_json_file(fixture(name)));
}
inline roller::Model load_model(const std::string& name) {
    return roller::model_from_json(roller::read_json_file(fixture(name)));
}

// expect a roller::Error with a given code
#define CHECK_ERRC(expr, errc)                                  \
    do {                                                        \
        bool thrown_ = false;                                   \
        try {                                                   \
            (void)(expr);                                       \
        } catch (const roller::Error& e_) {                     \
            thrown_ = true;                                     \
            CHECK_MESSAGE(e_.code() == (errc), std::string(e_.what()));      \
        }                                                       \
        CHECK_MESSAGE(thrown_, #expr " did not throw");         \
    } while (0)
