#include "hensel/hensel.h"

#include <cstdlib>
#include <cstring>

#include "commands.hpp"

using namespace hensel;

struct hensel_system {
    SystemSpec spec;
};

namespace {

char* dup_text(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void put_text(char** out_text, const std::string& s) {
    if (out_text) *out_text = dup_text(s);
}

// Runs a command body, routing report/diagnostic and status uniformly.
template <typename Fn>
int guarded(char** out_text, Fn&& fn) {
    if (out_text) *out_text = nullptr;
    try {
        put_text(out_text, fn());
        return HENSEL_OK;
    } catch (const Error& e) {
        put_text(out_text, e.what());
        return exit_class(e.code());
    } catch (const std::exception& e) {
        put_text(out_text, std::string("internal error: ") + e.what());
        return HENSEL_ERR_INTERNAL;
    }
}

} // namespace

extern "C" {

const char* hensel_version(void) { return "hensel 1.0.0"; }

int hensel_system_parse(const char* text, hensel_system** out_system, char** out_text) {
    if (out_system) *out_system = nullptr;
    if (out_text) *out_text = nullptr;
    if (!text || !out_system) {
        put_text(out_text, "null argument");
        return HENSEL_ERR_PARSE;
    }
    try {
        auto* sys = new hensel_system{parse_system(text)};
        *out_system = sys;
        return HENSEL_OK;
    } catch (const Error& e) {
        put_text(out_text, e.what());
        return exit_class(e.code());
    } catch (const std::exception& e) {
        put_text(out_text, std::string("internal error: ") + e.what());
        return HENSEL_ERR_INTERNAL;
    }
}

void hensel_system_free(hensel_system* system) { delete system; }

int hensel_system_nvars(const hensel_system* system) {
    return system ? int(system->spec.vars->size()) : -1;
}

int hensel_system_npolys(const hensel_system* system) {
    return system ? int(system->spec.polys.size()) : -1;
}

int hensel_system_describe(const hensel_system* system, char** out_text) {
    if (!system) return HENSEL_ERR_PRECONDITION;
    return guarded(out_text, [&] { return print_system(system->spec); });
}

int hensel_lift(const hensel_system* system, char** out_text) {
    if (!system) return HENSEL_ERR_PRECONDITION;
    return guarded(out_text, [&] { return run_lift(system->spec); });
}

int hensel_solve(const hensel_system* system, const char* target, char** out_text) {
    if (!system || !target) return HENSEL_ERR_PRECONDITION;
    return guarded(out_text, [&] { return run_solve(system->spec, target); });
}

int hensel_invert(const hensel_system* system, const char* target, char** out_text) {
    if (!system || !target) return HENSEL_ERR_PRECONDITION;
    return guarded(out_text, [&] { return run_invert(system->spec, target); });
}

int hensel_implicit(const hensel_system* system, const char* params, char** out_text) {
    if (!system || !params) return HENSEL_ERR_PRECONDITION;
    return guarded(out_text, [&] { return run_implicit(system->spec, params); });
}

int hensel_smooth(const hensel_system* system, char** out_text) {
    if (!system) return HENSEL_ERR_PRECONDITION;
    return guarded(out_text, [&] { return run_smooth(system->spec); });
}

int hensel_sample(const hensel_system* system, int count, int level, const char* avoid, char** out_text) {
    if (!system) return HENSEL_ERR_PRECONDITION;
    std::string avoid_copy;
    const std::string* avoid_ptr = nullptr;
    if (avoid) {
        avoid_copy = avoid;
        avoid_ptr = &avoid_copy;
    }
    return guarded(out_text, [&] { return run_sample(system->spec, count, level, avoid_ptr); });
}

void hensel_free_text(char* text) { std::free(text); }

} // extern "C"
