namespace dunkl {}
