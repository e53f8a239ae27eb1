from twelverep.cli import main

main()
