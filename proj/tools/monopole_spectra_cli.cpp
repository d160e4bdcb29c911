// Thin CLI over the shared library's C entry point: arguments go straight to
// ms_run, report text to stdout, diagnostics to stderr, exit code through.
#include <stdio.h>

#include "monopole_spectra.h"

int main(int argc, char** argv) {
  char* out = nullptr;
  char* err = nullptr;
  const int code =
      ms_run(argc - 1, const_cast<const char* const*>(argv + 1), &out, &err);
  if (out) {
    fputs(out, stdout);
    ms_string_free(out);
  }
  if (err) {
    fputs(err, stderr);
    ms_string_free(err);
  }
  return code;
}
