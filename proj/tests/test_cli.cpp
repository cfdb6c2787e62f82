#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"

namespace {

const std::string kCli = SHIRSHOV_CLI;
const std::string kDir = SHIRSHOV_THEORY_DIR;

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + kCli + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string theory(const char* name) { return kDir + "/" + name; }

}  // namespace

TEST_CASE("cli normalize") {
    CHECK(run("normalize " + theory("l_identity.theory") + " '(x>x)<x'").out == "x>(x<x)\n");
    CHECK(run("normalize " + theory("l_identity.theory") + " x").out == "x\n");
    CHECK(run("normalize " + theory("dialgebra.theory") + " 'x<(x<x)'").out == "x<(x>x)\n");
    const Run traced = run("normalize --trace " + theory("dialgebra.theory") + " 'x<(x<x)'");
    CHECK(traced.code == 0);
    CHECK(traced.out.find("step 1:") != std::string::npos);
    CHECK(traced.out.find("by F1") != std::string::npos);
    CHECK(run("normalize " + theory("dialgebra.theory") + " '((x<x)<x)<x'", "SHIRSHOV_FUEL=1").code == 3);
    CHECK(run("normalize " + theory("dialgebra.theory") + " 'x<'").code == 2);
}

TEST_CASE("cli check") {
    CHECK(run("check " + theory("l_identity.theory") + " --bound 6").code == 0);
    CHECK(run("check " + theory("dialgebra.theory") + " --bound 6").code == 0);
    const Run toy = run("check " + theory("toy.theory"));
    CHECK(toy.code == 1);
    CHECK(toy.out.find("normal form: x<x - x") != std::string::npos);
    const Run a = run("check --json " + theory("toy.theory"));
    const Run b = run("check --json " + theory("toy.theory"));
    CHECK(a.out == b.out);
    for (const char* key : {"\"theory_hash\"", "\"bound\"", "\"v_bound\"", "\"rules_instantiated\"", "\"compositions\"",
                            "\"kind\"", "\"w\"", "\"rules\"", "\"verdict\"", "\"normal_form\""})
        CHECK(a.out.find(key) != std::string::npos);
    CHECK(run("check " + theory("toy.theory"), "SHIRSHOV_FUEL=banana").code == 2);
    CHECK(run("check /does/not/exist.theory").code == 2);
}

TEST_CASE("cli complete") {
    const auto out = (std::filesystem::temp_directory_path() / "shirshov_toy_completed.theory").string();
    CHECK(run("complete " + theory("toy.theory") + " --out " + out).code == 0);
    std::ifstream in(out);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.find("c1: x<x -> x") != std::string::npos);
    CHECK(run("check " + out).code == 0);
    std::filesystem::remove(out);
    CHECK(run("complete --max-rules 0 " + theory("toy.theory")).code == 1);
    const Run same = run("complete " + theory("l_identity.theory"));
    CHECK(same.code == 0);
    CHECK(same.out == "[builtin]\nname = l_identity\ngenerators = x\n");
}

TEST_CASE("cli dims, irr and compare") {
    CHECK(run("dims " + theory("l_identity.theory") + " --max-size 6").out ==
          "size\tdim\n1\t1\n2\t2\n3\t7\n4\t30\n5\t143\n6\t728\n");
    CHECK(run("dims " + theory("dialgebra_2gen.theory") + " --max-size 4").out == "size\tdim\n1\t2\n2\t8\n3\t24\n4\t64\n");
    const Run eml = run("dims --oracle " + theory("eml_d2.theory") + " --max-size 3");
    CHECK(eml.code == 0);
    CHECK(eml.out == "size\tdim\toracle\n1\t2\t2\n2\t0\t0\n3\t0\t0\n");
    CHECK(run("dims --oracle " + theory("toy.theory") + " --max-size 3").code == 1);
    CHECK(run("irr " + theory("l_identity.theory") + " --size 2").out == "x>x\nx<x\n");
    CHECK(run("irr " + theory("l_identity.theory") + " --size 1").out == "x\n");
    CHECK(run("irr --count-only " + theory("dialgebra.theory") + " --size 5").out == "5\n");
    CHECK(run("compare " + theory("l_identity_2gen.theory") + " 'x>y' 'x<y'").out == "LT\n");
    CHECK(run("compare " + theory("l_identity_2gen.theory") + " 'x<y' 'x>y'").out == "GT\n");
    CHECK(run("compare " + theory("l_identity.theory") + " x x").out == "EQ\n");
    CHECK(run("frobnicate").code == 2);
}
